#include <gtest/gtest.h>

#include <nashift/random.hpp>
#include <nashift/tate.hpp>

#include "oracles.hpp"

using namespace nashift;

namespace {

const PrimeConfig kP2(2, 24);
const PrimeConfig kP3(3, 24);
const PrimeConfig kP5(5, 24);

TateSeries poly(const PrimeConfig& cfg, std::vector<std::int64_t> c) {
  return TateSeries::polynomial(C0Vector::from_integers(cfg, c));
}

MonicPoly monic(const PrimeConfig& cfg, std::vector<std::int64_t> lower) {
  std::vector<PadicScalar> c;
  for (auto x : lower) c.push_back(PadicScalar::from_integer(x, cfg));
  return MonicPoly(cfg, c);
}

TateSeries series_sum(const TateSeries& f, const TateSeries& g) { return add(f, g); }

}  // namespace

TEST(GaussNorm, Examples) {
  EXPECT_EQ(gauss_norm(TateSeries::one(kP5)), Norm::power(0));
  EXPECT_EQ(gauss_norm(poly(kP5, {5, 1})), Norm::power(0));
  EXPECT_EQ(gauss_norm(poly(kP5, {25, 5, 125})), Norm::power(1));
  EXPECT_TRUE(gauss_norm(poly(kP5, {0, 0})).is_zero());
}

TEST(GaussNorm, Multiplicative) {
  Rng rng(1);
  for (auto cfg : {kP2, kP3, kP5}) {
    for (int t = 0; t < 100; ++t) {
      auto f = random_series(rng, cfg, 1 + draw(rng, 10)), g = random_series(rng, cfg, 1 + draw(rng, 10));
      EXPECT_EQ(gauss_norm(multiply(f, g)), gauss_norm(f) * gauss_norm(g));
    }
  }
}

TEST(Multiply, UnitsAndMonomials) {
  Rng rng(2);
  auto f = random_series(rng, kP5, 6);
  EXPECT_EQ(multiply(f, TateSeries::one(kP5)), f);
  EXPECT_EQ(multiply(TateSeries::monomial(kP5, 1), TateSeries::monomial(kP5, 1)), TateSeries::monomial(kP5, 2));
  EXPECT_EQ(multiply(poly(kP5, {1, 1}), poly(kP5, {-1, 1})), poly(kP5, {-1, 0, 1}));
}

TEST(Multiply, RingAxioms) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto f = random_series(rng, kP3, 1 + draw(rng, 8));
    auto g = random_series(rng, kP3, 1 + draw(rng, 8));
    auto h = random_series(rng, kP3, 1 + draw(rng, 8));
    EXPECT_EQ(multiply(f, g), multiply(g, f));
    EXPECT_EQ(multiply(multiply(f, g), h), multiply(f, multiply(g, h)));
    EXPECT_EQ(multiply(f, series_sum(g, h)), series_sum(multiply(f, g), multiply(f, h)));
  }
}

TEST(Multiply, TruncationFoldsIntoTail) {
  auto f = poly(kP5, {1, 5, 25});
  auto prod = multiply(f, f, 2);
  EXPECT_EQ(prod.coeffs.size(), 2u);
  // Dropped coefficients of (1 + 5z + 25z^2)^2 are 75, 250, 625.
  EXPECT_EQ(prod.tail, Norm::power(2));
  EXPECT_FALSE(prod.is_polynomial());
}

TEST(Multiply, TailBoundPropagates) {
  TateSeries f{C0Vector::from_integers(kP5, {1, 5}), Norm::power(3)};
  auto prod = multiply(f, poly(kP5, {1, 1, 1}));
  EXPECT_EQ(prod.coeffs.size(), 2u);
  EXPECT_EQ(prod.tail, Norm::power(0));
}

TEST(Evaluate, Examples) {
  auto p = PadicScalar::from_integer(5, kP5);
  EXPECT_EQ(evaluate(TateSeries::monomial(kP5, 2), p), PadicScalar::from_integer(25, kP5));
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto f = random_series(rng, kP5, 7);
    EXPECT_EQ(evaluate(f, PadicScalar::zero(kP5)), f.coeffs[0]);
  }
}

TEST(Evaluate, BoundedByGaussNorm) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    auto f = random_series(rng, kP3, 1 + draw(rng, 10));
    auto z = random_integer(rng, kP3);
    EXPECT_LE(evaluate(f, z).abs(), gauss_norm(f));
  }
}

TEST(Evaluate, AgreesWithTermwiseSum) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    auto f = random_series(rng, kP2, 1 + draw(rng, 10));
    auto z = random_integer(rng, kP2);
    PadicScalar s = PadicScalar::zero(kP2);
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) s += f.coeffs[n] * z.pow(n);
    EXPECT_EQ(evaluate(f, z), s);
  }
}

TEST(Evaluate, OutsideTheUnitBall) {
  EXPECT_THROW(evaluate(TateSeries::one(kP5), PadicScalar::from_rational(1, 5, kP5)), DomainError);
}

TEST(ShiftOperators, Examples) {
  EXPECT_EQ(S1_apply(TateSeries::one(kP5)), TateSeries::monomial(kP5, 1));
  EXPECT_EQ(T1_apply(TateSeries::monomial(kP5, 1)), TateSeries::one(kP5));
  EXPECT_TRUE(gauss_norm(T1_apply(TateSeries::one(kP5))).is_zero());
}

TEST(ShiftOperators, ConjugateToSequenceShifts) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    auto f = random_series(rng, kP5, 1 + draw(rng, 10));
    EXPECT_EQ(S1_apply(f).coeffs, shift_S(f.coeffs));
    EXPECT_EQ(T1_apply(f).coeffs, shift_T(f.coeffs));
    EXPECT_EQ(S1_apply(f), multiply(TateSeries::monomial(kP5, 1), f));
    auto back = S1_apply(T1_apply(f));
    EXPECT_EQ(back.coeffs, f.coeffs - f.coeffs[0] * C0Vector::unit_vector(kP5, 0));
  }
}

TEST(MonicPoly, RejectsNonIntegralCoefficients) {
  EXPECT_THROW(MonicPoly(kP5, {PadicScalar::from_rational(1, 5, kP5)}), DomainError);
  EXPECT_THROW(MonicPoly(kP5, {}), DomainError);
}

TEST(MonicPoly, FromRootsEvaluatesToZero) {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    auto roots = random_scalars(rng, kP3, 1 + draw(rng, 4));
    auto P = MonicPoly::from_roots(kP3, roots);
    EXPECT_EQ(P.degree(), roots.size());
    for (const auto& r : roots) EXPECT_TRUE(evaluate(P.as_series(), r).is_zero());
  }
}

TEST(WeierstrassReduce, CubeModuloQuadratic) {
  // z^3 = z (z^2 - p) + p z.
  auto red = weierstrass_reduce(TateSeries::monomial(kP5, 3), monic(kP5, {-5, 0}));
  EXPECT_EQ(red.quotient, TateSeries::monomial(kP5, 1));
  EXPECT_EQ(red.remainder, C0Vector::from_integers(kP5, {0, 5}));
}

TEST(WeierstrassReduce, PolynomialItself) {
  auto P = monic(kP5, {3, 7, 1});
  auto red = weierstrass_reduce(P.as_series(), P);
  EXPECT_EQ(red.quotient, TateSeries::one(kP5));
  EXPECT_TRUE(sup_norm(red.remainder).is_zero());
}

TEST(WeierstrassReduce, ReconstructsAndIsIdempotent) {
  Rng rng(9);
  for (auto cfg : {kP2, kP3, kP5}) {
    for (int t = 0; t < 50; ++t) {
      auto f = random_series(rng, cfg, 1 + draw(rng, 12));
      auto P = random_monic(rng, cfg, 1 + draw(rng, 4));
      auto red = weierstrass_reduce(f, P);
      EXPECT_EQ(red.remainder.size(), P.degree());
      auto rebuilt = add(multiply(red.quotient, P.as_series()), TateSeries::polynomial(red.remainder));
      EXPECT_EQ(rebuilt, f);
      EXPECT_LE(sup_norm(red.remainder), gauss_norm(f));
      auto again = weierstrass_reduce(TateSeries::polynomial(red.remainder), P);
      EXPECT_EQ(again.remainder, red.remainder);
      EXPECT_TRUE(gauss_norm(again.quotient).is_zero());
    }
  }
}

TEST(IdealMember, MultipleOfZ) {
  auto z = monic(kP5, {0});
  auto m = ideal_member(poly(kP5, {0, 3, 4}), z);
  EXPECT_TRUE(m.member);
  EXPECT_TRUE(m.remainder_norm.is_zero());
  auto n = ideal_member(poly(kP5, {5, 3, 4}), z);
  EXPECT_FALSE(n.member);
  EXPECT_EQ(n.remainder_norm, Norm::power(1));
}

TEST(IdealMember, ProductsAreMembers) {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    auto P = random_monic(rng, kP3, 1 + draw(rng, 4));
    auto f = random_series(rng, kP3, 1 + draw(rng, 10));
    EXPECT_TRUE(ideal_member(multiply(P.as_series(), f), P).member);
  }
}

TEST(IdealMember, AgreesWithRootOracle) {
  Rng rng(11);
  int members = 0, nonmembers = 0;
  for (auto cfg : {kP3, kP5}) {
    for (int t = 0; t < 100; ++t) {
      auto palette = random_root_palette(rng, cfg, 3);
      auto roots = draw_roots(rng, palette, 1 + draw(rng, 3));
      auto P = MonicPoly::from_roots(cfg, roots);
      TateSeries g = random_series(rng, cfg, 1 + draw(rng, 8));
      if (draw(rng, 2) == 0) g = multiply(g, P.as_series());
      const bool by_roots = vanishes_at_roots(g, roots);
      EXPECT_EQ(ideal_member(g, P).member, by_roots);
      (by_roots ? members : nonmembers)++;
    }
  }
  EXPECT_GT(members, 0);
  EXPECT_GT(nonmembers, 0);
}

TEST(Divides, AgreesWithRootMultisets) {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    auto palette = random_root_palette(rng, kP5, 4);
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0, n = 1 + draw(rng, 3); i < n; ++i) a.push_back(draw(rng, palette.size()));
    for (std::size_t i = 0, n = 1 + draw(rng, 4); i < n; ++i) b.push_back(draw(rng, palette.size()));
    std::vector<PadicScalar> ra, rb;
    for (auto i : a) ra.push_back(palette[i]);
    for (auto i : b) rb.push_back(palette[i]);
    auto Pa = MonicPoly::from_roots(kP5, ra), Pb = MonicPoly::from_roots(kP5, rb);
    EXPECT_EQ(divides(Pa, Pb), oracle::root_multiset_included(a, b));
  }
}

TEST(Divides, PartialOrder) {
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    auto P = random_monic(rng, kP3, 1 + draw(rng, 3));
    auto Q = random_monic(rng, kP3, 1 + draw(rng, 3));
    auto R = random_monic(rng, kP3, 1 + draw(rng, 2));
    EXPECT_TRUE(divides(P, P));
    EXPECT_TRUE(divides(P, P * Q));
    EXPECT_TRUE(divides(P, P * Q * R));
    EXPECT_FALSE(divides(P * Q, P));
  }
}

TEST(Commutant, PolynomialSymbolHasNoError) {
  auto phi = poly(kP5, {1, 2, 3});
  auto c = commutant_poly_approx(phi, 2);
  EXPECT_TRUE(c.error.is_zero());
  EXPECT_EQ(c.approximant.coeffs, phi.coeffs);
}

TEST(Commutant, GeometricSymbolErrorIsFirstDroppedTerm) {
  std::vector<PadicScalar> a;
  for (std::int64_t n = 0; n < 12; ++n) a.push_back(PadicScalar::power_of_p(n, kP2));
  TateSeries phi = TateSeries::polynomial(C0Vector(kP2, a));
  for (std::size_t cutoff = 0; cutoff < 11; ++cutoff)
    EXPECT_EQ(commutant_poly_approx(phi, cutoff).error, Norm::power(static_cast<std::int64_t>(cutoff) + 1));
}

TEST(Commutant, ErrorIncludesTailBound) {
  TateSeries phi{C0Vector::from_integers(kP5, {1, 25}), Norm::power(1)};
  EXPECT_EQ(commutant_poly_approx(phi, 0).error, Norm::power(1));
  EXPECT_THROW(commutant_poly_approx(phi, 2), DomainError);
}

TEST(Commutant, ApproximantReproducesSymbolOnOne) {
  Rng rng(14);
  auto phi = random_series(rng, kP5, 9);
  auto c = commutant_poly_approx(phi, 8);
  EXPECT_EQ(c.approximant.apply(TateSeries::one(kP5)), phi);
}

TEST(Commutant, OperatorNormErrorMatchesOnRandomInputs) {
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    auto phi = random_series(rng, kP3, 10);
    const std::size_t cutoff = draw(rng, 9);
    auto c = commutant_poly_approx(phi, cutoff);
    auto f = random_series(rng, kP3, 1 + draw(rng, 6));
    auto diff = multiply(phi, f).coeffs - c.approximant.apply(f).coeffs;
    EXPECT_LE(sup_norm(diff), c.error * gauss_norm(f));
  }
}

TEST(Commutant, MultiplicationCommutesWithS1) {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    MultiplicationOperator M{random_series(rng, kP5, 1 + draw(rng, 8))};
    auto f = random_series(rng, kP5, 1 + draw(rng, 8));
    EXPECT_EQ(M.apply(S1_apply(f)), S1_apply(M.apply(f)));
  }
}

TEST(Ideals, InvariantUnderS1) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    auto P = random_monic(rng, kP5, 1 + draw(rng, 3));
    auto g = multiply(P.as_series(), random_series(rng, kP5, 1 + draw(rng, 6)));
    EXPECT_TRUE(ideal_member(S1_apply(g), P).member);
  }
}
