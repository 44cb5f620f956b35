#include <gtest/gtest.h>

#include <map>
#include <random>

#include "frobforge/frobforge.hpp"
#include "test_support.hpp"

namespace frobforge {
namespace {

struct Vars {
  PolyRingPtr ring;
  Polynomial x, y, z;
  explicit Vars(std::uint32_t p, std::vector<std::string> names = {"x", "y"}, OrderKind k = OrderKind::grevlex)
      : ring(make_poly_ring(p, names, k)) {
    x = Polynomial::variable(ring, 0);
    if (names.size() > 1) y = Polynomial::variable(ring, 1);
    if (names.size() > 2) z = Polynomial::variable(ring, 2);
  }
  Polynomial c(std::int64_t v) const { return Polynomial::constant(ring, v); }
};

// All monomials of total degree d in n variables.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == n) {
      cur.set(v, left);
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set(v, e);
      rec(v + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

Polynomial random_homogeneous(const PolyRingPtr& R, std::mt19937_64& rng, unsigned d) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(R->nvars(), d)) {
    if (rng() % 2) terms.push_back({m, static_cast<Coeff>(rng() % R->characteristic())});
  }
  return Polynomial(R, terms);
}

// Rank over F_p of a dense matrix, plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
      if (rows[rank][c] * k % p == 1) inv = k;
    }
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

// Membership of a homogeneous f in an ideal with homogeneous generators: f is
// in the span of {m * g : deg(m g) = deg f} in the degree-d graded piece.
bool membership_oracle(const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return true;
  const auto& R = f.ring();
  const unsigned d = f.total_degree();
  auto basis = monomials_of_degree(R->nvars(), d);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  auto key = [&](const ExponentVector& m) {
    std::vector<std::uint32_t> k;
    for (std::size_t v = 0; v < R->nvars(); ++v) k.push_back(m[v]);
    return k;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) index[key(basis[i])] = i;
  auto dense = [&](const Polynomial& g) {
    std::vector<std::uint64_t> row(basis.size(), 0);
    for (const auto& t : g.terms()) row[index.at(key(t.mon))] = t.coef;
    return row;
  };
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    for (const auto& m : monomials_of_degree(R->nvars(), d - g.total_degree())) {
      rows.push_back(dense(Polynomial::monomial(R, m) * g));
    }
  }
  std::size_t before = dense_rank(rows, R->characteristic());
  rows.push_back(dense(f));
  return dense_rank(rows, R->characteristic()) == before;
}

TEST(Buchberger, Examples) {
  Vars v5(5);
  auto G = buchberger(Ideal(v5.ring, {v5.y * v5.y - v5.x * v5.x * v5.x}));
  ASSERT_EQ(G.size(), 1u);
  EXPECT_EQ(G.elements()[0], v5.x * v5.x * v5.x - v5.y * v5.y);

  Vars v3(3);
  auto G3 = buchberger(Ideal(v3.ring, {v3.x + v3.y, v3.x - v3.y}));
  EXPECT_EQ(G3.elements(), (std::vector<Polynomial>{v3.x, v3.y}));

  Vars v2(2);
  auto G2 = buchberger(Ideal(v2.ring, {v2.x * v2.x, v2.x * v2.y}));
  EXPECT_EQ(G2.elements(), (std::vector<Polynomial>{v2.x * v2.x, v2.x * v2.y}));

  EXPECT_TRUE(buchberger(Ideal(v2.ring, {v2.x, v2.x + v2.c(1)})).contains_one());
  EXPECT_EQ(buchberger(Ideal(v2.ring, {v2.c(0)})).size(), 0u);
}

TEST(Buchberger, LexEliminatesLeadingVariable) {
  Vars v(3, {"x", "y"}, OrderKind::lex);
  // x - y^2, x*y - 1 under lex x > y: y^3 - 1 appears.
  auto G = buchberger(Ideal(v.ring, {v.x - v.y * v.y, v.x * v.y - v.c(1)}));
  EXPECT_EQ(G.elements(), (std::vector<Polynomial>{v.x - v.y * v.y, v.y * v.y * v.y - v.c(1)}));
}

TEST(Buchberger, PairCeilingIsEnforced) {
  Vars v(7, {"x", "y", "z"});
  Ideal I(v.ring, {v.x * v.x + v.y * v.z, v.y * v.y + v.x * v.z, v.z * v.z + v.x * v.y});
  gb::Options opt;
  opt.max_pairs = 1;
  opt.use_cache = false;
  EXPECT_THROW(buchberger(I, opt), ResourceError);
}

TEST(Buchberger, CacheReturnsSameBasis) {
  Vars v(11, {"x", "y", "z"});
  Ideal I(v.ring, {v.x * v.y + v.z * v.z * v.z, v.y * v.y - v.x * v.z});
  auto first = buchberger(I);
  std::size_t hits = global_cache().hits();
  auto second = buchberger(I);
  EXPECT_EQ(first, second);
  EXPECT_GT(global_cache().hits(), hits);
  gb::Options nocache;
  nocache.use_cache = false;
  EXPECT_EQ(buchberger(I, nocache), first);
}

TEST(NormalForm, Examples) {
  Vars v(2);
  auto Gx2 = buchberger(Ideal(v.ring, {v.x * v.x}));
  EXPECT_TRUE(normal_form(v.x * v.x * v.x, Gx2).is_zero());
  EXPECT_EQ(normal_form(v.y, Gx2), v.y);
  auto G = buchberger(Ideal(v.ring, {v.x * v.x + v.y}));
  EXPECT_EQ(normal_form(v.x * v.x * v.y + v.y, G), v.y * v.y + v.y);
}

// Random ideals: reducedness, S-pairs reduce to zero, idempotence.
TEST(Buchberger, BasisProperties) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
      auto R = make_poly_ring(p, {"x", "y", "z"}, kind);
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(testing::random_poly(R, rng, 3, 3));
        auto G = buchberger(Ideal(R, gens));
        auto elems = G.elements();
        for (const auto& g : gens) EXPECT_TRUE(ideal_contains(G, g));
        for (std::size_t i = 0; i < elems.size(); ++i) {
          EXPECT_EQ(elems[i].leading_term().coef, 1u);
          for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : elems[j].terms()) EXPECT_FALSE(elems[i].leading_term().mon.divides(t.mon));
            // S-polynomial computed directly from polynomial arithmetic.
            auto L = lcm(elems[i].leading_term().mon, elems[j].leading_term().mon);
            auto s = Polynomial::monomial(R, quotient(L, elems[i].leading_term().mon)) * elems[i] -
                     Polynomial::monomial(R, quotient(L, elems[j].leading_term().mon)) * elems[j];
            EXPECT_TRUE(normal_form(s, G).is_zero());
          }
        }
        EXPECT_EQ(buchberger(Ideal(R, elems)), G);
      }
    }
  }
}

TEST(NormalForm, MembershipMatchesLinearAlgebraOracle) {
  std::mt19937_64 rng(11);
  int members = 0, cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t p = trial % 2 ? 2 : 3;
    auto R = make_poly_ring(p, {"x", "y", "z"});
    std::vector<Polynomial> gens;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_homogeneous(R, rng, 1 + rng() % 2));
    unsigned d = 2 + static_cast<unsigned>(rng() % 2);
    Polynomial f(R);
    if (rng() % 2) {
      for (const auto& g : gens) {
        if (g.is_zero() || g.total_degree() > d) continue;
        f = f + random_homogeneous(R, rng, d - g.total_degree()) * g;
      }
    } else {
      f = random_homogeneous(R, rng, d);
    }
    auto G = buchberger(Ideal(R, gens));
    bool expected = membership_oracle(gens, f);
    members += expected;
    ++cases;
    EXPECT_EQ(ideal_contains(G, f), expected) << f.to_string();
  }
  EXPECT_EQ(cases, 100);
  EXPECT_GT(members, 20);
  EXPECT_LT(members, 90);
}

TEST(ColonIdeal, Examples) {
  Vars v(2);
  auto gens = [](const Ideal& I) { return buchberger(I).elements(); };
  EXPECT_EQ(gens(colon_ideal(Ideal(v.ring, {v.x * v.x}), v.x)), std::vector<Polynomial>{v.x});
  EXPECT_EQ(gens(colon_ideal(Ideal(v.ring, {v.x * v.y}), v.x)), std::vector<Polynomial>{v.y});
  EXPECT_EQ(gens(colon_ideal(Ideal(v.ring, {v.x * v.x + v.x * v.y}), v.x)), std::vector<Polynomial>{v.x + v.y});
  EXPECT_TRUE(colon_ideal(Ideal(v.ring), v.x).is_zero());
  EXPECT_THROW(colon_ideal(Ideal(v.ring, {v.x}), v.c(0)), DomainError);
  // f in I gives the unit ideal
  EXPECT_TRUE(buchberger(colon_ideal(Ideal(v.ring, {v.x * v.y}), v.x * v.y * v.y)).contains_one());
}

TEST(ColonIdeal, MonomialColonMatchesExponentRule) {
  // (x^a y^b) : x^c y^d = (x^{max(a-c,0)} y^{max(b-d,0)})
  Vars v(3);
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      for (unsigned c = 0; c < 4; ++c) {
        for (unsigned d = 0; d < 4; ++d) {
          if (a + b == 0 || c + d == 0) continue;
          auto I = Ideal(v.ring, {Polynomial::monomial(v.ring, ExponentVector{a, b})});
          auto J = colon_ideal(I, Polynomial::monomial(v.ring, ExponentVector{c, d}));
          ExponentVector e{a > c ? a - c : 0, b > d ? b - d : 0};
          EXPECT_EQ(buchberger(J).elements(), std::vector<Polynomial>{Polynomial::monomial(v.ring, e)});
        }
      }
    }
  }
}

TEST(RegularSequence, Examples) {
  Vars v(2);
  auto poly = make_ring(v.ring);
  EXPECT_TRUE(is_regular_sequence({v.x, v.y}, *poly).regular);
  auto node = make_ring(v.ring, {v.x * v.y});
  auto r = is_regular_sequence({v.x}, *node);
  EXPECT_FALSE(r.regular);
  EXPECT_EQ(r.failing_index, 1u);
  EXPECT_TRUE(is_regular_sequence({v.x + v.y}, *node).regular);
  auto r2 = is_regular_sequence({v.x + v.y, v.x}, *node);
  EXPECT_FALSE(r2.regular);
  EXPECT_EQ(r2.failing_index, 2u);
  EXPECT_THROW(is_regular_sequence({v.x + v.c(1)}, *poly), DomainError);
  auto artin = make_ring(v.ring, {v.x * v.x});
  EXPECT_EQ(is_regular_sequence({v.y, v.x}, *artin).failing_index, 2u);
}

TEST(KrullDimension, Examples) {
  Vars v(2);
  EXPECT_EQ(make_ring(v.ring)->dimension().value, 2);
  Vars u(2, {"x"});
  EXPECT_EQ(make_ring(u.ring, {u.x * u.x})->dimension().value, 0);
  EXPECT_EQ(make_ring(v.ring, {v.x * v.y})->dimension().value, 1);
  EXPECT_EQ(make_ring(v.ring, {v.y * v.y + v.x * v.x * v.x})->dimension().value, 1);
}

TEST(KrullDimension, ZeroRingIsFlagged) {
  Vars v(2);
  auto G = buchberger(Ideal(v.ring, {v.c(1)}));
  auto d = krull_dimension(G);
  EXPECT_TRUE(d.zero_ring);
  EXPECT_EQ(d.value, -1);
  EXPECT_THROW(make_ring(v.ring, {v.x + v.c(1)}), DomainError);
}

// Monomial ideals: dim = n - (minimum size of a variable set meeting every
// generator's support), by exhaustive search over hitting sets.
TEST(KrullDimension, MonomialIdealsMatchHittingSetSearch) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto R = make_poly_ring(2, names);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens;
      std::vector<std::uint32_t> supports;
      std::size_t k = 1 + rng() % 4;
      for (std::size_t g = 0; g < k; ++g) {
        ExponentVector m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::uint32_t>(rng() % 3 == 0 ? 1 + rng() % 2 : 0));
        if (m.is_one()) m.set(rng() % n, 1);
        gens.push_back(Polynomial::monomial(R, m));
        supports.push_back(m.support_mask());
      }
      std::size_t min_cover = n;
      for (std::uint32_t C = 0; C < (1u << n); ++C) {
        bool hits = true;
        for (auto s : supports) hits = hits && (s & C) != 0;
        if (hits) min_cover = std::min<std::size_t>(min_cover, static_cast<std::size_t>(std::popcount(C)));
      }
      auto d = krull_dimension(buchberger(Ideal(R, gens)));
      EXPECT_EQ(d.value, static_cast<int>(n - min_cover));
    }
  }
}

}  // namespace
}  // namespace frobforge
