#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "frobforge/cli/config.hpp"
#include "frobforge/cli/dsl.hpp"
#include "frobforge/frobforge.hpp"

namespace frobforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "frobforge.report/1";

inline Json kdim_json(const KDim& d) { return d.value ? Json(*d.value) : Json("infinite"); }
inline Json depth_json(const Depth& d) { return d.value ? Json(*d.value) : Json("infinite"); }

inline std::size_t default_max_i(const SessionConfig& cfg, const RingPtr& R) {
  return cfg.max_i.value_or(static_cast<std::size_t>(R->dimension().value) + 1);
}

inline Json ring_header(const dsl::RingDecl& r) {
  const auto& P = r.ring->poly();
  Json j;
  j["ring"] = r.name;
  j["char"] = P.characteristic();
  j["vars"] = P.vars;
  j["order"] = to_string(P.order.kind());
  std::vector<std::string> gens;
  for (const auto& g : r.ring->ideal().generators()) gens.push_back(g.to_string());
  j["ideal"] = gens;
  return j;
}

inline Json gb_json(const dsl::RingDecl& r) {
  Json j = ring_header(r);
  std::vector<std::string> gb;
  for (const auto& g : r.ring->gb().elements()) gb.push_back(g.to_string());
  j["gb"] = gb;
  return j;
}

inline Json dim_json(const dsl::RingDecl& r) {
  Json j;
  j["ring"] = r.name;
  j["dim"] = r.ring->dimension().value;
  return j;
}

inline Json tor_rows_json(const std::vector<TorRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(kdim_json(r.kdim));
  return a;
}

inline Json kunz_json(const dsl::RingDecl& r, const SessionConfig& cfg) {
  auto rep = kunz_test(r.ring, cfg.e_list);
  Json j;
  j["ring"] = r.name;
  j["verdict"] = rep.regular ? "regular" : "not-regular";
  j["max_i"] = rep.max_i;
  if (rep.witness) j["witness"] = Json{{"e", rep.witness->e}, {"i", rep.witness->i}};
  Json ev = Json::array();
  for (const auto& [e, rows] : rep.evidence) ev.push_back(Json{{"e", e}, {"tor", tor_rows_json(rows)}});
  j["evidence"] = ev;
  return j;
}

inline Json matrix_json(const ModuleMap& A) {
  Json rows = Json::array();
  for (const auto& row : A.to_strings()) rows.push_back(row);
  return rows;
}

inline Json pushforward_json(const dsl::RingDecl& r, unsigned e, const SessionConfig& cfg) {
  auto F = pushforward(r.ring, e, cfg.pushforward_bound);
  Json j;
  j["ring"] = r.name;
  j["e"] = e;
  j["q"] = F.q;
  j["generators"] = F.basis.size();
  std::vector<std::string> basis;
  for (const auto& b : F.basis) basis.push_back(Polynomial::monomial(r.ring->base(), b).to_string());
  j["basis"] = basis;
  j["relations"] = F.module.presentation().to_string();
  j["free"] = F.module.presentation().cols() == 0;
  j["kdim"] = kdim_json(KDim{F.module.kdim()});
  Json mult = Json::object();
  for (std::size_t v = 0; v < F.mult.size(); ++v) mult[r.ring->poly().vars[v]] = F.mult[v].to_string();
  j["multiplication"] = mult;
  return j;
}

inline Json module_header(const dsl::ModuleDecl& m) {
  Json j;
  j["module"] = m.name;
  j["ring"] = m.ring;
  return j;
}

inline Json pd_json(const PdVerdict& v) {
  Json j;
  if (v.finite) {
    j["pd"] = v.value;
  } else {
    j["pd"] = "infinite";
    j["witness_degree"] = v.witness_degree;
  }
  j["betti"] = v.betti;
  return j;
}

inline Json theorem_a_json(const TheoremAReport& rep) {
  Json j;
  j["applicable"] = rep.applicable;
  if (!rep.applicable) return j;
  j["pd"] = rep.pd;
  j["betti"] = rep.betti;
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    cases.push_back(Json{{"e", c.e},
                         {"tor", tor_rows_json(c.tor)},
                         {"vanishing", c.vanishing},
                         {"exact", c.exact},
                         {"in_bracket_power", c.in_bracket_power},
                         {"twisted_betti", c.twisted_betti},
                         {"twisted_pd", c.twisted_pd}});
  }
  j["cases"] = cases;
  j["failures"] = rep.failures;
  j["consistent"] = rep.consistent();
  return j;
}

inline Json theorem_b_json(const TheoremBReport& rep) {
  Json j;
  if (rep.pd_finite) {
    j["pd"] = rep.pd;
  } else {
    j["pd"] = "infinite";
    j["witness_degree"] = rep.witness_degree;
  }
  j["max_i"] = rep.max_i;
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    cases.push_back(Json{{"e", c.e},
                         {"tor", tor_rows_json(c.tor)},
                         {"witness", c.witness ? Json(*c.witness) : Json(nullptr)},
                         {"agrees", c.agrees}});
  }
  j["cases"] = cases;
  j["consistent"] = rep.consistent();
  return j;
}

inline Json crosscheck_json(const CrosscheckReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"i", r.i},
                        {"twisted", kdim_json(r.twisted)},
                        {"pushforward", kdim_json(r.pushforward)},
                        {"agree", r.agree}});
  }
  return Json{{"e", rep.e}, {"rows", rows}, {"consistent", rep.consistent}};
}

inline Json ext_frobenius_json(const ExtFrobeniusReport& rep) {
  Json j;
  j["e"] = rep.e;
  j["ext"] = tor_rows_json(rep.ext);
  j["id"] = rep.probe.id ? Json(*rep.probe.id) : Json("undetermined");
  j["bass"] = rep.probe.bass;
  j["verdict"] = to_string(rep.verdict);
  j["consistent"] = rep.consistent();
  return j;
}

inline Json acyclicity_json(const AcyclicityReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row{{"i", r.degree}, {"depth_term", depth_json(r.term_depth)}};
    if (r.degree >= 1) {
      row["homology_zero"] = r.homology_zero;
      row["depth_homology"] = r.homology_zero ? Json(nullptr) : depth_json(r.homology_depth);
    }
    rows.push_back(row);
  }
  return Json{{"rows", rows},
              {"depth_condition", rep.depth_condition},
              {"homology_condition", rep.homology_condition},
              {"acyclic", rep.acyclic},
              {"failures", rep.failures}};
}

/// Seeded acyclicity harness; a counterexample surfaces as VerificationFailure.
inline Json random_acyclicity_json(std::uint64_t seed, std::size_t count) {
  RandomComplexes gen(seed);
  std::size_t held = 0;
  for (std::size_t k = 0; k < count; ++k) held += acyclicity_lemma_check(gen.next()).hypotheses_hold();
  return Json{{"seed", seed}, {"complexes", count}, {"hypotheses_held", held}, {"counterexamples", 0}};
}

/// Reports are consistent unless some object carries "consistent": false.
inline bool all_consistent(const Json& j) {
  if (j.is_object()) {
    auto it = j.find("consistent");
    if (it != j.end() && it->is_boolean() && !it->get<bool>()) return false;
    for (const auto& [k, v] : j.items()) {
      if (!all_consistent(v)) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!all_consistent(v)) return false;
    }
  }
  return true;
}

/// Everything the corpus records for one .frob file.
inline Json entry_report(const dsl::Document& doc, const SessionConfig& cfg) {
  Json rings = Json::array();
  for (const auto& r : doc.rings) {
    Json j = ring_header(r);
    const int dim = r.ring->dimension().value;
    j["dim"] = dim;
    j["depth"] = ring_depth(r.ring);
    auto kunz = kunz_test(r.ring, cfg.e_list);
    j["kunz"] = kunz.regular ? "regular" : "not-regular";
    if (kunz.witness) j["kunz_witness"] = Json{{"e", kunz.witness->e}, {"i", kunz.witness->i}};
    bool pd_k = pd_verdict(PresentedModule::residue_field(r.ring)).finite;
    j["pd_k_finite"] = pd_k;
    j["kunz_concordant"] = pd_k == kunz.regular;
    j["consistent"] = pd_k == kunz.regular;
    rings.push_back(j);
  }
  Json modules = Json::array();
  for (const auto& m : doc.modules) {
    const RingPtr& R = m.module.ring();
    const std::size_t max_i = default_max_i(cfg, R);
    Json j = module_header(m);
    j["generators"] = m.module.num_generators();
    j["kdim"] = kdim_json(KDim{m.module.kdim()});
    j["depth"] = depth_json(depth(m.module));
    auto pd = pd_verdict(m.module);
    j.update(pd_json(pd));
    j["betti"] = betti(m.module, max_i + 1).betti;
    j["bass"] = bass_numbers(m.module, max_i);
    auto pi = enochs_xu_numbers(m.module, static_cast<std::size_t>(R->dimension().value) + 2);
    j["ex_numbers"] = pi;
    if (pd.finite) {
      // Tor_i(k, M) = 0 for depth R < i <= dim R + 2
      bool above = true;
      for (std::size_t i = ring_depth(R) + 1; i < pi.size(); ++i) above = above && pi[i] == 0;
      j["vanishing_above_depth"] = Json{{"consistent", above}};
    }
    j["theorem_a"] = theorem_a_json(theorem_a_verify(m.module, cfg.e_list));
    j["theorem_b"] = theorem_b_json(theorem_b_verify(m.module, cfg.e_list));
    std::uint64_t gens = 1;
    for (std::size_t v = 0; v < R->nvars(); ++v) gens *= R->characteristic();
    if (gens <= cfg.pushforward_bound) {
      j["crosscheck"] = crosscheck_json(tor_crosscheck(m.module, 1, max_i, cfg.pushforward_bound));
      if (R->dimension().value == 0) j["ext_frobenius"] = ext_frobenius_json(ext_frobenius(m.module, 1, 3));
    }
    modules.push_back(j);
  }
  Json complexes = Json::array();
  for (const auto& c : doc.complexes) {
    Json j{{"complex", c.name}, {"ring", c.ring}, {"ranks", c.complex.ranks()}};
    j["acyclicity"] = acyclicity_json(acyclicity_lemma_check(c.complex));
    complexes.push_back(j);
  }
  return Json{{"rings", rings}, {"modules", modules}, {"complexes", complexes}};
}

/// Plain-text rendering of a command report: one block per result with
/// `key: value` lines, nested values printed as compact JSON.
inline std::string render_table(const Json& report) {
  std::string out;
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto block = [&](const Json& obj, const std::string& indent) {
    std::size_t width = 0;
    for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : obj.items()) {
      out += indent + k + std::string(width - k.size(), ' ') + "  " + scalar(v) + "\n";
    }
  };
  for (const auto& [k, v] : report.items()) {
    if (k == "results" || k == "entries") continue;
    out += k + ": " + scalar(v) + "\n";
  }
  for (const char* key : {"results", "entries"}) {
    if (!report.contains(key)) continue;
    for (const auto& item : report[key]) {
      out += "\n";
      if (item.is_object()) {
        block(item, "  ");
      } else {
        out += "  " + scalar(item) + "\n";
      }
    }
  }
  return out;
}

}  // namespace frobforge::cli
