#include <gtest/gtest.h>

#include <nashift/mahler.hpp>
#include <nashift/random.hpp>

#include "oracles.hpp"

using namespace nashift;

namespace {

const PrimeConfig kP2(2, 24);
const PrimeConfig kP3(3, 24);
const PrimeConfig kP5(5, 24);

GridFunction squares(const PrimeConfig& cfg, std::size_t grid_max) {
  std::vector<std::int64_t> v;
  for (std::size_t x = 0; x <= grid_max; ++x) v.push_back(static_cast<std::int64_t>(x * x));
  return GridFunction::from_integers(cfg, v);
}

GridFunction basis_values(std::size_t n, const PrimeConfig& cfg, std::size_t grid_max) {
  std::vector<PadicScalar> v;
  for (std::size_t x = 0; x <= grid_max; ++x) v.push_back(mahler_P(n, x, cfg));
  return GridFunction(cfg, v);
}

}  // namespace

TEST(MahlerP, AgreesWithBinomialOracle) {
  for (std::size_t x = 0; x <= 60; ++x)
    for (std::size_t n = 0; n <= x + 2; ++n)
      ASSERT_EQ(mahler_P(n, x, kP5), oracle::from_i128(oracle::binomial(x, n), kP5)) << n << " " << x;
}

TEST(MahlerP, Examples) {
  for (std::size_t x = 0; x < 10; ++x) EXPECT_EQ(mahler_P(0, x, kP3), PadicScalar::one(kP3));
  EXPECT_EQ(mahler_P(2, 4, kP3), PadicScalar::from_integer(6, kP3));
  for (std::size_t n = 1; n < 6; ++n)
    for (std::size_t x = 0; x < n; ++x) EXPECT_TRUE(mahler_P(n, x, kP3).is_zero());
}

TEST(MahlerCoeffs, Constant) {
  auto b = mahler_coeffs(GridFunction::constant(kP5, 6, PadicScalar::one(kP5)));
  EXPECT_EQ(b.coeffs, C0Vector::unit_vector(kP5, 0).resized(7));
}

TEST(MahlerCoeffs, Squares) {
  auto phi = squares(kP5, 5);
  auto expect = oracle::iterated_differences(phi.values());
  EXPECT_EQ(C0Vector(kP5, expect), C0Vector::from_integers(kP5, {0, 1, 2, 0, 0, 0}));
  EXPECT_EQ(mahler_coeffs(phi).coeffs, C0Vector::from_integers(kP5, {0, 1, 2, 0, 0, 0}));
}

TEST(MahlerCoeffs, BasisFunctionGivesUnitVector) {
  auto b = mahler_coeffs(basis_values(3, kP2, 9));
  EXPECT_EQ(b.coeffs, C0Vector::unit_vector(kP2, 3).resized(10));
}

TEST(MahlerCoeffs, MatchesIteratedDifferences) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    auto phi = random_grid(rng, kP3, 1 + draw(rng, 30));
    EXPECT_EQ(mahler_coeffs(phi).coeffs, C0Vector(kP3, oracle::iterated_differences(phi.values())));
  }
}

TEST(MahlerEval, UnitVectorIsConstantOne) {
  MahlerCoeffs e0{C0Vector::unit_vector(kP5, 0)};
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(mahler_eval(e0, x), PadicScalar::one(kP5));
}

TEST(MahlerEval, RoundTrip) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    auto phi = random_grid(rng, kP2, 1 + draw(rng, 24));
    auto b = mahler_coeffs(phi);
    for (std::size_t x = 0; x <= phi.grid_max(); ++x) ASSERT_EQ(mahler_eval(b, x), phi(x));
  }
}

TEST(MahlerEval, TransformIsIsometricOnGrids) {
  Rng rng(3);
  for (auto cfg : {kP2, kP3, kP5}) {
    for (int t = 0; t < 50; ++t) {
      MahlerCoeffs b{random_sequence(rng, cfg, 1 + draw(rng, 16), 8)};
      auto phi = mahler_synthesize(b, b.coeffs.size() - 1 + draw(rng, 4));
      EXPECT_EQ(grid_norm(phi), sup_norm(b.coeffs));
    }
  }
}

TEST(IndefiniteSum, OnesGivesIdentity) {
  auto s = indefinite_sum(GridFunction::constant(kP5, 7, PadicScalar::one(kP5)));
  EXPECT_EQ(s, basis_values(1, kP5, 7));
}

TEST(IndefiniteSum, MahlerConjugacyWithS) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    auto phi = random_grid(rng, kP3, 1 + draw(rng, 20));
    auto lhs = mahler_coeffs(indefinite_sum(phi)).coeffs;
    auto rhs = shift_S(mahler_coeffs(phi).coeffs).resized(phi.grid_max() + 1);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(IndefiniteSum, SublatticeXN) {
  Rng rng(5);
  for (std::size_t N = 0; N < 6; ++N) {
    auto phi = random_grid(rng, kP5, 12);
    std::vector<PadicScalar> v = phi.values();
    for (std::size_t j = 0; j <= N; ++j) v[j] = PadicScalar::zero(kP5);
    GridFunction in_xn(kP5, v);
    ASSERT_TRUE(vanishes_through(in_xn, N));
    EXPECT_TRUE(vanishes_through(indefinite_sum(in_xn), N + 1));
  }
}

TEST(IndefiniteSum, NeedsTwoPoints) {
  EXPECT_THROW(indefinite_sum(GridFunction::constant(kP5, 0, PadicScalar::one(kP5))), DomainError);
}

TEST(Difference, BasisLowering) {
  EXPECT_EQ(difference(basis_values(2, kP5, 8)), basis_values(1, kP5, 7));
  EXPECT_TRUE(vanishes_through(difference(basis_values(0, kP5, 8)), 7));
}

TEST(Difference, InvertsIndefiniteSum) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    auto phi = random_grid(rng, kP2, 2 + draw(rng, 20));
    auto back = difference(indefinite_sum(phi));
    for (std::size_t x = 0; x <= back.grid_max(); ++x) EXPECT_EQ(back(x), phi(x));
  }
}

TEST(Difference, MahlerConjugacyWithT) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    auto phi = random_grid(rng, kP5, 1 + draw(rng, 20));
    EXPECT_EQ(mahler_coeffs(difference(phi)).coeffs, shift_T(mahler_coeffs(phi).coeffs));
  }
}

TEST(ShiftedConvolution, OnesConvolveToIdentity) {
  auto one = GridFunction::constant(kP3, 9, PadicScalar::one(kP3));
  std::vector<std::int64_t> n;
  for (std::int64_t i = 0; i <= 9; ++i) n.push_back(i);
  EXPECT_EQ(shifted_convolution(one, one), GridFunction::from_integers(kP3, n));
}

TEST(ShiftedConvolution, WithOneIsIndefiniteSum) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    auto phi = random_grid(rng, kP2, 1 + draw(rng, 20));
    auto one = GridFunction::constant(kP2, phi.grid_max(), PadicScalar::one(kP2));
    EXPECT_EQ(shifted_convolution(phi, one), indefinite_sum(phi));
  }
}

TEST(ShiftedConvolution, SymmetricAndBilinear) {
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    auto phi = random_grid(rng, kP5, 10), psi = random_grid(rng, kP5, 10), chi = random_grid(rng, kP5, 10);
    EXPECT_EQ(shifted_convolution(phi, psi), shifted_convolution(psi, phi));
    std::vector<PadicScalar> sum;
    for (std::size_t x = 0; x <= 10; ++x) sum.push_back(psi(x) + chi(x));
    auto lhs = shifted_convolution(phi, GridFunction(kP5, sum));
    auto a = shifted_convolution(phi, psi), b = shifted_convolution(phi, chi);
    for (std::size_t x = 0; x <= 10; ++x) EXPECT_EQ(lhs(x), a(x) + b(x));
  }
}

TEST(ShiftedConvolution, OutputGridIsTheSmaller) {
  auto a = GridFunction::constant(kP5, 4, PadicScalar::one(kP5));
  auto b = GridFunction::constant(kP5, 9, PadicScalar::one(kP5));
  EXPECT_EQ(shifted_convolution(a, b).grid_max(), 4u);
}

TEST(CoherentState, ZeroEigenvalue) {
  auto phi = coherent_state(PadicScalar::zero(kP5), 6);
  EXPECT_EQ(phi, GridFunction::constant(kP5, 6, PadicScalar::one(kP5)));
  EXPECT_TRUE(vanishes_through(difference(phi), 5));
}

TEST(CoherentState, LambdaFive) {
  auto lambda = PadicScalar::from_integer(5, kP5);
  auto phi = coherent_state(lambda, 4);
  EXPECT_EQ(phi(0), PadicScalar::from_integer(1, kP5));
  EXPECT_EQ(phi(1), PadicScalar::from_integer(6, kP5));
  EXPECT_EQ(phi(2), PadicScalar::from_integer(36, kP5));
  EXPECT_EQ(difference(phi)(0), PadicScalar::from_integer(5, kP5));
  EXPECT_EQ(difference(phi)(0), lambda * phi(0));
}

TEST(CoherentState, EigenRelationAndBinomialCoefficients) {
  Rng rng(10);
  for (auto cfg : {kP2, kP3, kP5}) {
    for (int t = 0; t < 20; ++t) {
      auto lambda = random_scalar(rng, cfg, 1, 6);
      auto phi = coherent_state(lambda, 64);
      auto d = difference(phi);
      for (std::size_t x = 0; x < 64; ++x) ASSERT_EQ(d(x), lambda * phi(x));
      auto b = mahler_coeffs(phi).coeffs;
      // (1 + l)^x = sum_n l^n C(x, n).
      PadicScalar power = PadicScalar::one(cfg);
      for (std::size_t n = 0; n <= 64; ++n) {
        ASSERT_EQ(b[n], power);
        power *= lambda;
      }
    }
  }
}

TEST(CoherentState, OutsideTheOpenBall) {
  EXPECT_THROW(coherent_state(PadicScalar::one(kP5), 4), DomainError);
  EXPECT_THROW(coherent_state(PadicScalar::from_rational(1, 5, kP5), 4), DomainError);
}
