#include <gtest/gtest.h>

#include <random>
#include <set>

#include "frobforge/frobforge.hpp"
#include "test_support.hpp"

namespace frobforge {
namespace {

using testing::Ring;

std::uint64_t kdim_of(const DerivedValue& v) {
  EXPECT_TRUE(v.kdim.finite());
  return v.kdim.value.value_or(999);
}

TEST(Syzygy, Examples) {
  Ring s(2, {"x", "y"});
  EXPECT_EQ(syzygy(s.mat({{s.x}})).cols(), 0u);
  auto K = syzygy(s.mat({{s.x, s.y}}));
  EXPECT_EQ(K, s.mat({{s.y}, {s.x}}));

  Ring node(2, {"x", "y"}, {"x*y"});
  EXPECT_EQ(syzygy(node.mat({{node.x}})), node.mat({{node.y}}));
}

TEST(Syzygy, KernelIsGeneratedOverArtinianRing) {
  // Over F_2[x,y]/(x^2, y^2) (16 elements) enumerate ker of A : R^2 -> R
  // and compare its size with the span of the computed syzygies.
  Ring s(2, {"x", "y"}, {"x^2", "y^2"});
  std::vector<Polynomial> elems;
  std::vector<Polynomial> basis{s.one(), s.x, s.y, s.x * s.y};
  for (unsigned mask = 0; mask < 16; ++mask) {
    Polynomial f = s.zero();
    for (unsigned b = 0; b < 4; ++b) {
      if (mask >> b & 1) f = f + basis[b];
    }
    elems.push_back(f);
  }
  std::vector<std::pair<Polynomial, Polynomial>> cases{
      {s.x, s.y}, {s.x, s.x}, {s.x * s.y, s.zero()}, {s.x + s.y, s.x * s.y}};
  for (const auto& [a, b] : cases) {
    auto A = s.mat({{a, b}});
    std::set<std::string> kernel;
    for (const auto& u : elems) {
      for (const auto& v : elems) {
        if (s.R->reduce(a * u + b * v).is_zero()) kernel.insert(s.R->reduce(u).to_string() + "|" + s.R->reduce(v).to_string());
      }
    }
    auto S = syzygy(A);
    // Closure of {0} under adding r * (column) for every ring element r.
    std::set<std::string> span{"0|0"};
    std::vector<std::pair<Polynomial, Polynomial>> frontier{{s.zero(), s.zero()}};
    while (!frontier.empty()) {
      auto [u, v] = frontier.back();
      frontier.pop_back();
      for (std::size_t c = 0; c < S.cols(); ++c) {
        for (const auto& r : elems) {
          Polynomial u2 = s.R->reduce(u + r * S.at(0, c)), v2 = s.R->reduce(v + r * S.at(1, c));
          if (span.insert(u2.to_string() + "|" + v2.to_string()).second) frontier.emplace_back(u2, v2);
        }
      }
    }
    EXPECT_EQ(span, kernel) << A.to_string();
  }
}

TEST(Homology, Examples) {
  Ring s(2, {"x", "y"});
  FreeComplex koszul(s.R, 1, {s.mat({{s.x, s.y}}), s.mat({{s.y}, {s.x}})});
  EXPECT_TRUE(homology(koszul, 1).is_zero);
  EXPECT_TRUE(homology(koszul, 2).is_zero);
  auto h0 = homology(koszul, 0);
  EXPECT_FALSE(h0.is_zero);
  EXPECT_EQ(h0.module.kdim(), 1u);
  EXPECT_TRUE(homology(koszul, 5).is_zero);

  FreeComplex single(s.R, 1, {});
  auto h = homology(single, 0);
  EXPECT_FALSE(h.is_zero);
  EXPECT_FALSE(h.module.kdim().has_value());

  Ring d(2, {"x"}, {"x^2"});
  FreeComplex mult(d.R, 1, {d.mat({{d.x}})});
  EXPECT_EQ(homology(mult, 0).module.kdim(), 1u);
  EXPECT_EQ(homology(mult, 1).module.kdim(), 1u);
  EXPECT_FALSE(homology(mult, 1).is_zero);

  EXPECT_THROW(FreeComplex(s.R, 1, {s.mat({{s.x}}), s.mat({{s.y}})}), StructuralError);
  EXPECT_THROW(FreeComplex(s.R, 2, {s.mat({{s.x}})}), StructuralError);
}

TEST(Resolution, Examples) {
  Ring s(2, {"x", "y"});
  auto res = free_resolution(s.k(), 5);
  EXPECT_EQ(res.betti(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_FALSE(res.truncated);
  EXPECT_TRUE(res.complex.all_entries_in_maximal_ideal());

  auto free = free_resolution(s.free(1), 3);
  EXPECT_EQ(free.betti(), std::vector<std::size_t>{1});

  Ring node(2, {"x", "y"}, {"x*y"});
  auto per = free_resolution(PresentedModule::cyclic(node.R, {node.x}), 4);
  EXPECT_EQ(per.betti(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_TRUE(per.truncated);
  for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(per.complex.map(i), node.mat({{i % 2 ? node.x : node.y}}));
}

TEST(Resolution, ExactAndMinimalOnSamples) {
  std::vector<Ring> rings;
  rings.emplace_back(2, std::vector<std::string>{"x", "y"}, std::vector<std::string>{"y^2+x^3"});
  rings.emplace_back(3, std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x^2+y^2"});
  rings.emplace_back(2, std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x^2", "x*y"});
  for (auto& s : rings) {
    std::vector<PresentedModule> modules{s.k(), PresentedModule::cyclic(s.R, {s.x}),
                                         PresentedModule(s.mat({{s.x, s.y, s.zero()}, {s.zero(), s.x, s.y}}))};
    for (const auto& M : modules) {
      auto res = free_resolution(M, 4);
      const auto& F = res.complex;
      EXPECT_TRUE(F.all_entries_in_maximal_ideal());
      for (std::size_t i = 1; i < F.length(); ++i) EXPECT_TRUE(homology(F, static_cast<std::ptrdiff_t>(i)).is_zero);
      auto h0 = homology(F, 0);
      EXPECT_EQ(h0.module.kdim(), M.kdim());
      auto tors = tor_table(s.k(), M, 4);
      for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(kdim_of(tors[i]), F.rank(static_cast<std::ptrdiff_t>(i)));
    }
  }
}

TEST(Minimalize, Examples) {
  Ring s(2, {"x", "y"});
  FreeComplex unit(s.R, 1, {s.mat({{s.one()}})});
  auto z = minimalize(unit);
  EXPECT_EQ(z.ranks(), (std::vector<std::size_t>{0, 0}));

  FreeComplex two(s.R, 2, {s.mat({{s.one(), s.x}, {s.zero(), s.y}})});
  auto m = minimalize(two);
  EXPECT_EQ(m.ranks(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(m.map(1), s.mat({{s.y}}));

  FreeComplex koszul(s.R, 1, {s.mat({{s.x, s.y}}), s.mat({{s.y}, {s.x}})});
  EXPECT_EQ(minimalize(koszul), koszul);
}

TEST(Minimalize, LocalUnitPivot) {
  // 1 + x is a unit locally at m; R --(1+x)--> R cancels.
  Ring s(3, {"x", "y"});
  FreeComplex c(s.R, 2, {s.mat({{s.one() + s.x, s.y}, {s.x, s.x * s.y}})});
  auto m = minimalize(c);
  EXPECT_EQ(m.ranks(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(m.all_entries_in_maximal_ideal());
}

TEST(TorExt, Examples) {
  Ring s(2, {"x", "y"});
  EXPECT_EQ(kdim_of(tor(s.k(), s.k(), 0)), 1u);
  EXPECT_EQ(kdim_of(tor(s.k(), s.k(), 1)), 2u);
  EXPECT_EQ(kdim_of(tor(s.k(), s.k(), 2)), 1u);
  EXPECT_TRUE(tor(s.k(), s.k(), 3).is_zero);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_TRUE(tor(s.free(1), s.k(), i).is_zero);

  Ring d(2, {"x"}, {"x^2"});
  auto e0 = ext(d.k(), d.free(1), 0);
  EXPECT_EQ(kdim_of(e0), 1u);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_TRUE(ext(d.k(), d.free(1), i).is_zero);
  EXPECT_EQ(kdim_of(hom(d.free(1), d.k())), 1u);
  EXPECT_EQ(kdim_of(hom(d.free(1), d.free(1))), 2u);
  // Ext^i(k,k) over F_2[x]/(x^2) is k in every degree.
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(kdim_of(ext(d.k(), d.k(), i)), 1u);
}

TEST(TorExt, HomIntoModuleOfFreeIsModule) {
  Ring s(3, {"x", "y"}, {"x^2", "y^3"});
  PresentedModule M(s.mat({{s.x, s.y * s.y}}));
  EXPECT_EQ(hom(s.free(1), M).kdim.value, M.kdim());
  EXPECT_EQ(tor(M, s.free(1), 0).kdim.value, M.kdim());
}

TEST(TorExt, TorIsBalancedOnRandomPairs) {
  std::mt19937_64 rng(23);
  int pairs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t p = trial % 2 ? 2 : 3;
    Ring s(p, {"x", "y"}, trial % 3 == 0 ? std::vector<std::string>{"x*y"} : std::vector<std::string>{"x^2"});
    auto cyclic = [&] {
      std::vector<Polynomial> gens;
      gens.push_back(s.x.pow(1 + rng() % 3) + (rng() % 2 ? s.y * s.x : s.zero()));
      gens.push_back(s.y.pow(1 + rng() % 3));
      if (rng() % 2) gens.push_back(s.x * s.y);
      return PresentedModule::cyclic(s.R, gens);
    };
    auto M = cyclic(), N = cyclic();
    auto a = tor_table(M, N, 2), b = tor_table(N, M, 2);
    for (std::size_t i = 0; i <= 2; ++i) {
      ASSERT_TRUE(a[i].kdim.finite());
      EXPECT_EQ(a[i].kdim, b[i].kdim) << "trial " << trial << " i " << i;
      EXPECT_EQ(a[i].is_zero, a[i].kdim.is_zero());
    }
    ++pairs;
  }
  EXPECT_EQ(pairs, 20);
}

TEST(Betti, Examples) {
  Ring s(2, {"x", "y"});
  EXPECT_EQ(betti(s.k(), 3).betti, (std::vector<std::size_t>{1, 2, 1, 0}));
  EXPECT_EQ(betti(s.free(1), 2).betti, (std::vector<std::size_t>{1, 0, 0}));
  Ring node(2, {"x", "y"}, {"x*y"});
  EXPECT_EQ(betti(PresentedModule::cyclic(node.R, {node.x}), 4).betti, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}

TEST(PresentedModule, ZeroRingIsRefused) {
  auto base = make_poly_ring(2, {"x"});
  auto Z = make_ring(base, {Polynomial::constant(base, 1)});
  EXPECT_TRUE(Z->is_zero_ring());
  EXPECT_THROW(PresentedModule::free(Z, 1), DomainError);
}

TEST(PresentedModule, KDimCountsStaircase) {
  Ring s(5, {"x", "y"}, {"x^3"});
  EXPECT_EQ(PresentedModule::cyclic(s.R, {s.y * s.y}).kdim(), 6u);
  EXPECT_FALSE(PresentedModule::cyclic(s.R, {s.x * s.y}).kdim().has_value());
  EXPECT_TRUE(PresentedModule::cyclic(s.R, {s.x + s.one() - s.x}).is_zero());
  EXPECT_EQ(s.k().kdim(), 1u);
}

}  // namespace
}  // namespace frobforge
