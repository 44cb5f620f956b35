#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "frobforge/cli/report.hpp"

namespace frobforge::cli {

namespace fs = std::filesystem;

enum ExitCode { kOk = 0, kVerification = 1, kUsage = 2, kResource = 3 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses a DSL file; syntax and semantic errors carry line and column.
inline dsl::Document load_document(const std::string& path) {
  return dsl::parse(read_file(path));
}

/// Which declarations a command applies to; empty means all of them.
struct Selection {
  std::string ring, module, complex, with;
};

inline std::vector<const dsl::RingDecl*> pick_rings(const dsl::Document& doc, const Selection& sel) {
  std::vector<const dsl::RingDecl*> out;
  for (const auto& r : doc.rings) {
    if (sel.ring.empty() || sel.ring == r.name) out.push_back(&r);
  }
  if (!sel.ring.empty() && out.empty()) throw UsageError("no ring named '" + sel.ring + "'");
  return out;
}

inline std::vector<const dsl::ModuleDecl*> pick_modules(const dsl::Document& doc, const Selection& sel) {
  std::vector<const dsl::ModuleDecl*> out;
  for (const auto& m : doc.modules) {
    if ((sel.module.empty() || sel.module == m.name) && (sel.ring.empty() || sel.ring == m.ring)) out.push_back(&m);
  }
  if (!sel.module.empty() && out.empty()) throw UsageError("no module named '" + sel.module + "'");
  return out;
}

// The second argument of tor/ext: a declared module or the residue field.
inline PresentedModule partner(const dsl::Document& doc, const Selection& sel, const dsl::ModuleDecl& m) {
  if (sel.with.empty() || sel.with == "k") return PresentedModule::residue_field(m.module.ring());
  const auto* n = doc.find_module(sel.with);
  if (n == nullptr) throw UsageError("no module named '" + sel.with + "'");
  if (n->ring != m.ring) throw UsageError("modules '" + m.name + "' and '" + n->name + "' live over different rings");
  return n->module;
}

/// Runs a single-file command and returns its report.
inline Json run_command(const std::string& command, const std::string& path, const std::string& verify_kind,
                        const Selection& sel, const SessionConfig& cfg, std::size_t random_count) {
  dsl::Document doc = load_document(path);
  Json results = Json::array();
  auto per_module = [&](const std::function<void(const dsl::ModuleDecl&, Json&)>& fn) {
    for (const auto* m : pick_modules(doc, sel)) {
      Json j = module_header(*m);
      fn(*m, j);
      results.push_back(j);
    }
  };
  auto imax = [&](const dsl::ModuleDecl& m) { return default_max_i(cfg, m.module.ring()); };

  if (command == "gb") {
    for (const auto* r : pick_rings(doc, sel)) results.push_back(gb_json(*r));
  } else if (command == "dim") {
    for (const auto* r : pick_rings(doc, sel)) results.push_back(dim_json(*r));
  } else if (command == "kunz") {
    for (const auto* r : pick_rings(doc, sel)) results.push_back(kunz_json(*r, cfg));
  } else if (command == "pushforward") {
    for (const auto* r : pick_rings(doc, sel)) {
      for (unsigned e : cfg.e_list) results.push_back(pushforward_json(*r, e, cfg));
    }
  } else if (command == "depth") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) {
      j["depth"] = depth_json(depth(m.module));
    });
  } else if (command == "betti") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) { j["betti"] = betti(m.module, imax(m)).betti; });
  } else if (command == "pd") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) { j.update(pd_json(pd_verdict(m.module))); });
  } else if (command == "bass") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) { j["bass"] = bass_numbers(m.module, imax(m)); });
  } else if (command == "exnumbers") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) { j["ex_numbers"] = enochs_xu_numbers(m.module, imax(m)); });
  } else if (command == "tor" || command == "ext") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) {
      PresentedModule N = partner(doc, sel, m);
      j["with"] = sel.with.empty() ? "k" : sel.with;
      auto table = command == "tor" ? tor_table(m.module, N, imax(m)) : ext_table(N, m.module, imax(m));
      Json a = Json::array();
      for (const auto& v : table) a.push_back(kdim_json(v.kdim));
      j[command] = a;
    });
  } else if (command == "frobtor") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) {
      Json a = Json::array();
      for (unsigned e : cfg.e_list) a.push_back(Json{{"e", e}, {"tor", tor_rows_json(tor_frobenius(m.module, e, imax(m)))}});
      j["frobtor"] = a;
    });
  } else if (command == "crosscheck") {
    per_module([&](const dsl::ModuleDecl& m, Json& j) {
      Json a = Json::array();
      for (unsigned e : cfg.e_list) a.push_back(crosscheck_json(tor_crosscheck(m.module, e, imax(m), cfg.pushforward_bound)));
      j["crosscheck"] = a;
    });
  } else if (command == "verify") {
    if (verify_kind == "thmA") {
      per_module([&](const dsl::ModuleDecl& m, Json& j) { j.update(theorem_a_json(theorem_a_verify(m.module, cfg.e_list))); });
    } else if (verify_kind == "thmB") {
      per_module([&](const dsl::ModuleDecl& m, Json& j) { j.update(theorem_b_json(theorem_b_verify(m.module, cfg.e_list))); });
    } else if (verify_kind == "cor-ext") {
      per_module([&](const dsl::ModuleDecl& m, Json& j) {
        Json a = Json::array();
        std::size_t top = cfg.max_i.value_or(3);
        for (unsigned e : cfg.e_list) a.push_back(ext_frobenius_json(ext_frobenius(m.module, e, top, cfg.pushforward_bound)));
        j["ext_frobenius"] = a;
      });
    } else if (verify_kind == "prop-acyclicity") {
      for (const auto& c : doc.complexes) {
        if (!sel.complex.empty() && sel.complex != c.name) continue;
        Json j{{"complex", c.name}, {"ring", c.ring}, {"ranks", c.complex.ranks()}};
        j.update(acyclicity_json(acyclicity_lemma_check(c.complex)));
        results.push_back(j);
      }
      if (random_count > 0) results.push_back(Json{{"random", random_acyclicity_json(cfg.seed, random_count)}});
    } else {
      throw UsageError("verify expects thmA, thmB, prop-acyclicity or cor-ext, got '" + verify_kind + "'");
    }
  } else {
    throw UsageError("unknown command '" + command + "'");
  }

  Json report;
  report["schema"] = kSchema;
  report["command"] = command == "verify" ? "verify " + verify_kind : command;
  report["file"] = fs::path(path).filename().string();
  report["e"] = cfg.e_list;
  report["results"] = results;
  report["consistent"] = all_consistent(results);
  return report;
}

struct EntryOutcome {
  Json json;
  int code = kOk;
};

inline EntryOutcome run_entry(const fs::path& file, const SessionConfig& cfg, bool write_expected) {
  EntryOutcome out;
  Json entry;
  entry["name"] = file.stem().string();
  try {
    dsl::Document doc = load_document(file.string());
    Json report = entry_report(doc, cfg);
    bool consistent = all_consistent(report);
    fs::path golden = file;
    golden.replace_extension(".expected.json");
    std::string status = "absent";
    if (write_expected) {
      std::ofstream(golden, std::ios::trunc) << report.dump(2) << "\n";
      status = "written";
    } else if (fs::exists(golden)) {
      Json expected;
      try {
        expected = Json::parse(read_file(golden.string()));
      } catch (const Json::parse_error& e) {
        throw UsageError(golden.string() + ": " + e.what());
      }
      status = expected == report ? "match" : "mismatch";
    }
    entry["golden"] = status;
    entry["consistent"] = consistent;
    entry["report"] = report;
    if (!consistent || status == "mismatch") out.code = kVerification;
  } catch (const ResourceError& e) {
    entry["error"] = Json{{"kind", "resource"}, {"message", e.what()}};
    out.code = kResource;
  } catch (const VerificationFailure& e) {
    entry["error"] = Json{{"kind", "verification"}, {"message", e.what()}};
    out.code = kVerification;
  } catch (const Error& e) {
    entry["error"] = Json{{"kind", "input"}, {"message", e.what()}};
    out.code = kUsage;
  }
  out.json = entry;
  return out;
}

/// Runs every `.frob` file of `dir` (sorted by name), compares against
/// `.expected.json` goldens, and appends the seeded acyclicity harness.
inline EntryOutcome run_corpus(const std::string& dir, const SessionConfig& cfg, bool write_expected) {
  if (!fs::is_directory(dir)) throw UsageError("corpus directory " + dir + " does not exist");
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".frob") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<EntryOutcome> outcomes(files.size());
  if (cfg.parallel) {
    std::vector<std::future<EntryOutcome>> futures;
    for (const auto& f : files) futures.push_back(std::async(std::launch::async, run_entry, f, cfg, write_expected));
    for (std::size_t i = 0; i < files.size(); ++i) outcomes[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) outcomes[i] = run_entry(files[i], cfg, write_expected);
  }
  EntryOutcome total;
  Json entries = Json::array();
  std::size_t consistent = 0, mismatches = 0, errors = 0;
  for (auto& o : outcomes) {
    if (total.code == kOk) total.code = o.code;
    consistent += o.json.value("consistent", false);
    mismatches += o.json.value("golden", "") == "mismatch";
    errors += o.json.contains("error");
    entries.push_back(std::move(o.json));
  }
  Json harness;
  try {
    harness = random_acyclicity_json(cfg.seed, cfg.random_complexes);
  } catch (const VerificationFailure& e) {
    harness = Json{{"seed", cfg.seed}, {"error", e.what()}};
    if (total.code == kOk) total.code = kVerification;
  }
  Json report;
  report["schema"] = kSchema;
  report["command"] = "corpus run";
  report["e"] = cfg.e_list;
  report["seed"] = cfg.seed;
  report["entries"] = entries;
  report["acyclicity_harness"] = harness;
  report["summary"] = Json{{"entries", files.size()},
                           {"consistent", consistent},
                           {"golden_mismatches", mismatches},
                           {"errors", errors}};
  total.json = report;
  return total;
}

inline std::string render(const Json& report, Format f) {
  return f == Format::json ? report.dump(2) + "\n" : render_table(report);
}

}  // namespace frobforge::cli
