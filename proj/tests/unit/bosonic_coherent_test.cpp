#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "ordquant/bosonic.hpp"
#include "ordquant/coherent.hpp"
#include "ordquant/errors.hpp"
#include "ordquant/ordering.hpp"

using namespace ordquant;

namespace {
const OperatorPoly kA = OperatorPoly::A();
const OperatorPoly kAd = OperatorPoly::Adag();
OperatorPoly c(const GradedCoeff& v) { return OperatorPoly(v); }
}  // namespace

TEST(ToBosonic, Quadratures) {
  EXPECT_EQ(to_bosonic(OperatorPoly::Q()), c(GradedCoeff::eta()) * (kA + kAd));
  EXPECT_EQ(to_bosonic(OperatorPoly::P()), c(GradedCoeff::i() * GradedCoeff::eta()) * (kAd - kA));
  EXPECT_EQ(to_bosonic(pow(OperatorPoly::Q(), 2)),
            c(GradedCoeff::hbar() * GradedCoeff::rational(1, 2)) * (kA * kA + kA * kAd + kAd * kA + kAd * kAd));
}

TEST(ToBosonic, RoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = oracle::random_operator_poly(rng, 6, 2);
    EXPECT_EQ(to_canonical(to_bosonic(x)), x);
    const auto b = oracle::random_operator_poly(rng, 6, 2, 3, true);
    EXPECT_EQ(to_bosonic(to_canonical(b)), b);
  }
}

TEST(ToNormalOrder, Examples) {
  EXPECT_EQ(to_normal_order(kA * kAd), kAd * kA + c(GradedCoeff(1)));
  EXPECT_EQ(to_normal_order(kA * kA * kAd), kAd * kA * kA + c(GradedCoeff(2)) * kA);
  EXPECT_TRUE(is_ordered(to_normal_order(OperatorPoly::P() * OperatorPoly::Q()), OrderTarget::normal));
}

TEST(SymmetricNormalForm, AgreesWithRewritingPath) {
  for (std::uint32_t n = 0; n <= 5; ++n) {
    for (std::uint32_t m = 0; m <= 5; ++m) {
      const auto mono = PhaseMonomial::qp(n, m);
      EXPECT_EQ(symmetric_normal_form(mono), to_normal_order(to_bosonic(quantize_symmetric(mono)))) << n << "," << m;
    }
  }
}

TEST(SymmetricNormalForm, QP) {
  // qp -> (i hbar / 2)(Adag^2 - A^2): the symmetric product has no Adag A term.
  const auto x = symmetric_normal_form(PhaseMonomial::qp(1, 1));
  EXPECT_EQ(x, c(GradedCoeff::i() * GradedCoeff::hbar() * GradedCoeff::rational(1, 2)) * (kAd * kAd - kA * kA));
}

TEST(CoherentMatrixElement, Examples) {
  const std::complex<double> a1[] = {{0.3, -0.7}};
  const std::complex<double> a2[] = {{1.1, 0.4}};
  EXPECT_NEAR(std::abs(coherent_matrix_element(kA, a1, a2, 1.0) - a2[0]), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(coherent_matrix_element(kAd, a1, a2, 1.0) - std::conj(a1[0])), 0.0, 1e-14);
  const double n2 = std::norm(a2[0]);
  EXPECT_NEAR(std::abs(coherent_matrix_element(kAd * kA, a2, a2, 1.0) - n2), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(coherent_matrix_element(kA * kAd, a2, a2, 1.0) - (n2 + 1.0)), 0.0, 1e-14);
}

TEST(CoherentMatrixElement, Errors) {
  const std::complex<double> a[] = {{1.0, 0.0}};
  EXPECT_THROW(coherent_matrix_element(kA, a, a, 0.0), ModelError);
  EXPECT_THROW(coherent_matrix_element(OperatorPoly::A(1), a, a, 1.0), ModelError);
}

TEST(CoherentExpectation, Examples) {
  const double center[] = {0.8, -1.3};
  const double hbar = 0.37;
  EXPECT_NEAR(coherent_expectation(quantize_symmetric(PhaseMonomial::qp(1, 1)), center, hbar).real(), 0.8 * -1.3, 1e-13);
  EXPECT_NEAR(coherent_expectation(pow(OperatorPoly::Q(), 2), center, hbar).real(), 0.64 + hbar / 2, 1e-13);
  EXPECT_NEAR(std::abs(coherent_expectation(c(GradedCoeff(1)), center, hbar) - 1.0), 0.0, 1e-15);
  // <QP> = q0 p0 + i hbar / 2
  const auto qp = coherent_expectation(OperatorPoly::Q() * OperatorPoly::P(), center, hbar);
  EXPECT_NEAR(qp.real(), 0.8 * -1.3, 1e-13);
  EXPECT_NEAR(qp.imag(), hbar / 2, 1e-13);
}

TEST(CoherentExpectation, ExactMatchesPositionRepresentationOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = oracle::random_operator_poly(rng, 5, 2, 3, false, true);
    const std::vector<Rational> center = {oracle::random_rational(rng), oracle::random_rational(rng),
                                          oracle::random_rational(rng), oracle::random_rational(rng)};
    EXPECT_EQ(coherent_expectation_exact(x, center), oracle::schrodinger_expectation(x, center));
  }
}

TEST(CoherentExpectation, SymmetricQuantizationIsReal) {
  const std::vector<Rational> center = {Rational(3, 2), Rational(-1, 3)};
  for (std::uint32_t n = 0; n <= 5; ++n) {
    for (std::uint32_t m = 0; m <= 5; ++m) {
      const auto v = coherent_expectation_exact(quantize_symmetric(PhaseMonomial::qp(n, m)), center);
      for (const auto& t : v.terms()) EXPECT_EQ(sgn(t.value.im), 0);
    }
  }
}

TEST(CoherentExpectation, NumericMatchesExact) {
  const double center[] = {0.5, 0.25};
  const std::vector<Rational> exact = {Rational(1, 2), Rational(1, 4)};
  const auto x = pow(OperatorPoly::P(), 3) * OperatorPoly::Q() + OperatorPoly::Q() * OperatorPoly::P();
  const auto num = coherent_expectation(x, center, 0.2);
  const auto ex = coherent_expectation_exact(x, exact).evaluate(0.2);
  EXPECT_NEAR(std::abs(num - ex), 0.0, 1e-13);
}
