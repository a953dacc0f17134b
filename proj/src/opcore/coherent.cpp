#include "ordquant/coherent.hpp"

#include <cmath>
#include <string>

#include "ordquant/bosonic.hpp"
#include "ordquant/errors.hpp"

namespace ordquant {

namespace {

void require_modes(const OperatorPoly& x, std::size_t available) {
  for (const auto& [mode, fam] : x.families()) {
    if (mode >= available) {
      throw ModelError("operator acts on mode " + std::to_string(mode + 1) + " but only " +
                       std::to_string(available) + " mode(s) were supplied");
    }
  }
}

}  // namespace

std::complex<double> coherent_matrix_element(const OperatorPoly& x, std::span<const std::complex<double>> alpha1,
                                             std::span<const std::complex<double>> alpha2, double hbar) {
  if (!(hbar > 0)) throw ModelError("hbar must be positive");
  if (alpha1.size() != alpha2.size()) throw ModelError("coherent amplitudes must cover the same modes");
  require_modes(x, alpha1.size());
  const OperatorPoly normal = to_normal_order(x);
  std::complex<double> sum = 0.0;
  for (const auto& [w, c] : normal.terms()) {
    std::complex<double> term = c.evaluate(hbar);
    for (const auto& f : w.factors()) {
      const std::complex<double> base = f.gen.kind == Kind::Adag ? std::conj(alpha1[f.gen.mode]) : alpha2[f.gen.mode];
      term *= std::pow(base, static_cast<int>(f.exp));
    }
    sum += term;
  }
  return sum;
}

std::complex<double> coherent_expectation(const OperatorPoly& x, std::span<const double> center, double hbar) {
  if (!(hbar > 0)) throw ModelError("hbar must be positive");
  if (center.size() % 2) throw ModelError("center must hold (q, p) pairs");
  std::vector<std::complex<double>> alpha(center.size() / 2);
  const double scale = 1.0 / std::sqrt(2.0 * hbar);
  for (std::size_t j = 0; j < alpha.size(); ++j) alpha[j] = scale * std::complex<double>(center[2 * j], center[2 * j + 1]);
  return coherent_matrix_element(x, alpha, alpha, hbar);
}

GradedCoeff coherent_expectation_normal(const OperatorPoly& normal, std::span<const Rational> center) {
  if (center.size() % 2) throw ModelError("center must hold (q, p) pairs");
  require_modes(normal, center.size() / 2);
  // alpha = (q + i p) / (2 eta)
  std::vector<GradedCoeff> alpha, alpha_star;
  for (std::size_t j = 0; j < center.size() / 2; ++j) {
    const Rational q = center[2 * j] / 2;
    const Rational p = center[2 * j + 1] / 2;
    alpha.emplace_back(GaussianRational(q, p), -1);
    alpha_star.emplace_back(GaussianRational(q, -p), -1);
  }
  GradedCoeff sum;
  for (const auto& [w, c] : normal.terms()) {
    GradedCoeff term = c;
    for (const auto& f : w.factors()) {
      term *= pow(f.gen.kind == Kind::Adag ? alpha_star[f.gen.mode] : alpha[f.gen.mode], f.exp);
    }
    sum += term;
  }
  return sum;
}

GradedCoeff coherent_expectation_exact(const OperatorPoly& x, std::span<const Rational> center) {
  return coherent_expectation_normal(to_normal_order(x), center);
}

}  // namespace ordquant
