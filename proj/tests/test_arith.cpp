#include <gtest/gtest.h>

#include <random>

#include "frobforge/arith/polynomial.hpp"
#include "test_support.hpp"

namespace frobforge {
namespace {

using testing::random_poly;

TEST(PrimeField, SmallExamples) {
  PrimeField f5{Prime(5)};
  EXPECT_EQ(f5.inv(2), 3u);
  PrimeField f2{Prime(2)};
  EXPECT_EQ(f2.add(1, 1), 0u);
  PrimeField f7{Prime(7)};
  EXPECT_EQ(f7.mul(3, 5), 1u);
}

// Exhaustive multiplication and inverse tables against plain integer arithmetic.
TEST(PrimeField, MatchesExhaustiveTables) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    PrimeField F{Prime(p)};
    for (std::uint32_t a = 0; a < p; ++a) {
      EXPECT_EQ(F.neg(a), (p - a) % p);
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ(F.mul(a, b), (a * b) % p);
        EXPECT_EQ(F.add(a, b), (a + b) % p);
        EXPECT_EQ(F.sub(a, b), (a + p - b) % p);
      }
      if (a != 0) {
        std::uint32_t brute = 0;
        for (std::uint32_t b = 1; b < p; ++b) {
          if ((a * b) % p == 1) brute = b;
        }
        EXPECT_EQ(F.inv(a), brute);
        EXPECT_EQ(F.pow(a, p), a);  // Fermat
      }
    }
  }
}

TEST(PrimeField, Errors) {
  EXPECT_THROW(Prime(4), DomainError);
  EXPECT_THROW(Prime(1), DomainError);
  EXPECT_THROW(Prime((std::uint64_t{1} << 31)), DomainError);
  EXPECT_NO_THROW(Prime((std::uint64_t{1} << 31) - 1));
  PrimeField F{Prime(7)};
  EXPECT_THROW(F.inv(0), DomainError);
  EXPECT_EQ(F.from_int(-1), 6u);
}

TEST(MonomialOrder, GrevlexAndLex) {
  MonomialOrder grevlex(OrderKind::grevlex, 3);
  MonomialOrder lex(OrderKind::lex, 3);
  ExponentVector x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1}, one{0, 0, 0};
  ExponentVector x2{2, 0, 0}, yz{0, 1, 1}, xz{1, 0, 1}, y3{0, 3, 0};
  EXPECT_GT(grevlex.compare(x, y), 0);
  EXPECT_GT(grevlex.compare(y, z), 0);
  EXPECT_GT(grevlex.compare(z, one), 0);
  EXPECT_GT(grevlex.compare(yz, x2) < 0 ? 1 : 0, 0);  // x^2 > yz
  EXPECT_LT(grevlex.compare(xz, ExponentVector{0, 2, 0}), 0);  // y^2 > xz in grevlex
  EXPECT_GT(lex.compare(xz, ExponentVector{0, 2, 0}), 0);
  EXPECT_GT(lex.compare(x, y3), 0);
  EXPECT_LT(grevlex.compare(x, y3), 0);
  MonomialOrder swapped(OrderKind::lex, std::vector<std::size_t>{1, 0, 2});
  EXPECT_GT(swapped.compare(y, x), 0);
  EXPECT_THROW(MonomialOrder(OrderKind::lex, std::vector<std::size_t>{0, 0, 1}), StructuralError);
}

TEST(MonomialOrder, MultiplicativeAndWellOrdered) {
  std::mt19937_64 rng(7);
  for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
    MonomialOrder ord(kind, 3);
    for (int trial = 0; trial < 500; ++trial) {
      auto rnd = [&] { return ExponentVector{static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4),
                                              static_cast<std::uint32_t>(rng() % 4)}; };
      ExponentVector a = rnd(), b = rnd(), c = rnd();
      EXPECT_EQ(ord.compare(a, b) > 0, ord.compare(a * c, b * c) > 0);
      EXPECT_GE(ord.compare(a, ExponentVector{0, 0, 0}), 0);
    }
  }
}

TEST(Polynomial, Examples) {
  auto R2 = make_poly_ring(2, {"x", "y"});
  auto x = Polynomial::variable(R2, 0), y = Polynomial::variable(R2, 1);
  EXPECT_EQ((x + y) * (x + y), x * x + y * y);
  EXPECT_TRUE(((x + y) * Polynomial(R2)).is_zero());

  auto R3 = make_poly_ring(3, {"x"});
  auto X = Polynomial::variable(R3, 0);
  auto one = Polynomial::constant(R3, 1), two = Polynomial::constant(R3, 2);
  // term-by-term: x^2 + 2x + x + 2 = x^2 + 3x + 2
  EXPECT_EQ((X + one) * (X + two), X * X + two);
  EXPECT_EQ(((X + one) * (X + two)).to_string(), "x^2 + 2");
}

TEST(Polynomial, MismatchedRingsThrow) {
  auto A = make_poly_ring(2, {"x", "y"});
  auto B = make_poly_ring(2, {"x"});
  EXPECT_THROW(Polynomial::variable(A, 0) * Polynomial::variable(B, 0), StructuralError);
  EXPECT_THROW(Polynomial(A, {{ExponentVector{1}, 1}}), StructuralError);
}

TEST(Frobenius, Examples) {
  auto R2 = make_poly_ring(2, {"x", "y"});
  auto x = Polynomial::variable(R2, 0), y = Polynomial::variable(R2, 1);
  EXPECT_EQ(frobenius_power(x + y, 1), x * x + y * y);
  EXPECT_EQ(frobenius_power(Polynomial::constant(R2, 1), 3), Polynomial::constant(R2, 1));

  auto R5 = make_poly_ring(5, {"x", "y"});
  auto X = Polynomial::variable(R5, 0), Y = Polynomial::variable(R5, 1);
  auto f = X * X * Y + Polynomial::constant(R5, 3);
  auto expected = Polynomial::monomial(R5, ExponentVector{10, 5}) + Polynomial::constant(R5, 3);
  EXPECT_EQ(frobenius_power(f, 1), expected);
  EXPECT_EQ(f.pow(5), expected);  // repeated squaring route
  EXPECT_THROW(frobenius_power(f, 0), DomainError);
}

TEST(Frobenius, ExponentOverflowIsSignalled) {
  auto R = make_poly_ring(2, {"x"});
  auto big = Polynomial::monomial(R, ExponentVector{1u << 29});
  EXPECT_THROW(frobenius_power(big, 3), ResourceError);
  EXPECT_THROW(big * big * big * big * big, ResourceError);
}

TEST(Frobenius, ScalingEqualsRepeatedMultiplication) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = make_poly_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 17; ++trial) {
      auto f = random_poly(R, rng, 3, 4);
      for (unsigned e = 1; e <= 2; ++e) {
        std::uint64_t q = frobenius_q(p, e);
        EXPECT_EQ(frobenius_power(f, e), f.pow(q)) << f.to_string();
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(Frobenius, IsRingHomomorphism) {
  std::mt19937_64 rng(99);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = make_poly_ring(p, {"x", "y"});
    for (int trial = 0; trial < 30; ++trial) {
      auto f = random_poly(R, rng, 3, 4), g = random_poly(R, rng, 3, 4);
      for (unsigned e = 1; e <= 2; ++e) {
        EXPECT_EQ(frobenius_power(f * g, e), frobenius_power(f, e) * frobenius_power(g, e));
        EXPECT_EQ(frobenius_power(f + g, e), frobenius_power(f, e) + frobenius_power(g, e));
      }
      EXPECT_TRUE((f + (-f)).is_zero());
      EXPECT_TRUE((f - f).terms().empty());
    }
  }
}

}  // namespace
}  // namespace frobforge
