#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobforge/cache.hpp"
#include "frobforge/error.hpp"
#include "frobforge/gb/module_element.hpp"

namespace frobforge::gb {

struct Options {
  /// Abort with ResourceError after this many S-pairs have been reduced.
  std::size_t max_pairs = 5'000'000;
  /// Consult and fill the process-wide content cache.
  bool use_cache = true;
};

namespace detail {

struct Pair {
  std::size_t i, j;  // i < j, indices into the element list
  ExponentVector lcm;
  std::uint32_t pos;
};

// Buchberger's algorithm on submodules of P^rank with the Gebauer-Moeller
// pair update. Pairs are processed by the normal strategy (smallest lcm
// degree), ties broken by insertion index.
class Engine {
 public:
  Engine(const Context& ctx, std::size_t rank, const Options& opt)
      : ctx_(ctx), ideal_case_(rank == 1), opt_(opt) {}

  std::vector<MVec> run(const std::vector<MVec>& gens) {
    for (const auto& g : gens) {
      if (g.empty()) continue;
      insert(g);
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++processed > opt_.max_pairs) {
        throw ResourceError("Groebner basis computation exceeded " + std::to_string(opt_.max_pairs) +
                            " S-pairs");
      }
      insert(s_vector(p));
    }
    return finish();
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  MVec s_vector(const Pair& p) const {
    const MVec& f = elems_[p.i];
    const MVec& g = elems_[p.j];
    // Both monic: (lcm/lt f) f - (lcm/lt g) g
    MVec a = axpy(MVec{}, 0, 1, quotient(p.lcm, f.front().mon), f, ctx_);
    return axpy(a, 0, ctx_.field->neg(1), quotient(p.lcm, g.front().mon), g, ctx_);
  }

  Reducer active_reducer() const {
    Reducer r;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (active_[k]) r.add(&elems_[k]);
    }
    return r;
  }

  void insert(MVec f) {
    MVec h = normal_form(std::move(f), active_reducer(), ctx_);
    if (h.empty()) return;
    make_monic(h, ctx_);
    elems_.push_back(std::move(h));
    leads_.push_back(lead_of(elems_.back()));
    active_.push_back(false);
    update(elems_.size() - 1);
  }

  bool disjoint(std::size_t a, std::size_t b) const {
    return ideal_case_ && coprime(leads_[a].mon, leads_[b].mon);
  }

  void update(std::size_t h) {
    const Lead& H = leads_[h];
    struct Cand {
      std::size_t g;
      ExponentVector lcm;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && leads_[g].pos == H.pos) cands.push_back({g, lcm(leads_[g].mon, H.mon)});
    }
    // Criterion M/F: drop (g,h) when another candidate's lcm divides its lcm.
    // Among equal lcms the last one survives, unless a disjoint pair exists.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (disjoint(cands[a].g, h)) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (b == a || !cands[b].keep) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        bool equal = cands[b].lcm == cands[a].lcm;
        if (!equal || b > a || disjoint(cands[b].g, h)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // Old pairs whose lcm is divisible by lt(h) are redundant (criterion B).
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool redundant = p.pos == H.pos && H.mon.divides(p.lcm) &&
                       lcm(leads_[p.i].mon, H.mon) != p.lcm && lcm(leads_[p.j].mon, H.mon) != p.lcm;
      if (!redundant) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& c : cands) {
      if (c.keep && !disjoint(c.g, h)) pairs_.push_back({c.g, h, c.lcm, H.pos});
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && leads_[g].pos == H.pos && H.mon.divides(leads_[g].mon)) active_[g] = false;
    }
    active_[h] = true;
  }

  std::vector<MVec> finish() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (active_[k]) idx.push_back(k);
    }
    std::vector<MVec> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) {
      Reducer others;
      for (std::size_t m : idx) {
        if (m != k) others.add(&elems_[m]);
      }
      MVec tail(elems_[k].begin() + 1, elems_[k].end());
      MVec r{elems_[k].front()};
      MVec nt = normal_form(std::move(tail), others, ctx_);
      r.insert(r.end(), nt.begin(), nt.end());
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [&](const MVec& a, const MVec& b) { return ctx_.compare(a.front(), b.front()) > 0; });
    return out;
  }

  Context ctx_;
  bool ideal_case_;
  Options opt_;
  std::vector<MVec> elems_;
  std::vector<Lead> leads_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
};

inline std::string cache_description(const std::vector<MVec>& gens, std::size_t rank, const Context& ctx) {
  std::string s = "gb/v1|p=" + std::to_string(ctx.field->characteristic()) +
                  "|n=" + std::to_string(ctx.nvars) + "|ord=" + to_string(ctx.order->kind()) + ":";
  for (auto v : ctx.order->ranking()) s += std::to_string(v) + ",";
  s += "|rank=" + std::to_string(rank) + "|";
  for (const auto& g : gens) s += serialize(g) + ";";
  return s;
}

inline std::string encode_basis(const std::vector<MVec>& basis) {
  std::string out = std::to_string(basis.size());
  for (const auto& g : basis) out += "|" + serialize(g);
  return out;
}

inline std::optional<std::vector<MVec>> decode_basis(const std::string& payload, std::size_t nvars) {
  std::vector<MVec> out;
  std::size_t bar = payload.find('|');
  std::size_t count = 0;
  try {
    count = std::stoul(payload.substr(0, bar));
  } catch (...) {
    return std::nullopt;
  }
  std::size_t start = bar;
  for (std::size_t k = 0; k < count; ++k) {
    if (start == std::string::npos) return std::nullopt;
    std::size_t next = payload.find('|', start + 1);
    std::string chunk = payload.substr(start + 1, next == std::string::npos ? std::string::npos : next - start - 1);
    std::istringstream in(chunk);
    std::string tok;
    MVec v;
    while (in >> tok) {
      std::size_t c1 = tok.find(':');
      std::size_t c2 = tok.find(':', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) return std::nullopt;
      MTerm t{ExponentVector(nvars), static_cast<std::uint32_t>(std::stoul(tok.substr(0, c1))),
              static_cast<Coeff>(std::stoul(tok.substr(c1 + 1, c2 - c1 - 1)))};
      std::string exps = tok.substr(c2 + 1);
      std::size_t var = 0, p = 0;
      while (p <= exps.size() && var < nvars) {
        std::size_t dot = exps.find('.', p);
        t.mon.set(var++, std::stoull(exps.substr(p, dot == std::string::npos ? std::string::npos : dot - p)));
        if (dot == std::string::npos) break;
        p = dot + 1;
      }
      if (var != nvars && nvars != 0) return std::nullopt;
      v.push_back(t);
    }
    if (v.empty()) return std::nullopt;
    out.push_back(std::move(v));
    start = next;
  }
  if (start != std::string::npos) return std::nullopt;
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of the submodule of P^rank generated by `gens`,
/// position-over-term order. Elements are monic and sorted by leading term,
/// largest first.
inline std::vector<MVec> groebner_basis(const std::vector<MVec>& gens, std::size_t rank, const Context& ctx,
                                        const Options& opt = {}) {
  std::string key;
  if (opt.use_cache) {
    key = content_key(detail::cache_description(gens, rank, ctx));
    if (auto hit = global_cache().get(key)) {
      try {
        if (auto basis = detail::decode_basis(*hit, ctx.nvars)) return *basis;
      } catch (const std::exception&) {
      }
    }
  }
  detail::Engine engine(ctx, rank, opt);
  auto basis = engine.run(gens);
  if (opt.use_cache) global_cache().put(key, detail::encode_basis(basis));
  return basis;
}

inline Reducer reducer_of(const std::vector<MVec>& basis) {
  Reducer r;
  for (const auto& g : basis) r.add(&g);
  return r;
}

}  // namespace frobforge::gb
