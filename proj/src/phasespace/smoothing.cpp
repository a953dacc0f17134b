#include "ordquant/smoothing.hpp"

#include <cmath>
#include <string>

#include "ordquant/errors.hpp"
#include "ordquant/ordering.hpp"

namespace ordquant {

PhasePoint make_phase_point(std::vector<double> coords) {
  if (coords.size() % 2) throw ModelError("phase point must hold (q, p) pairs, got " + std::to_string(coords.size()) + " entries");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) throw ModelError("phase point entry " + std::to_string(i) + " is not finite");
  }
  return PhasePoint{std::move(coords)};
}

namespace {

void require_dimension(std::uint32_t modes, std::size_t point_size) {
  if (2 * static_cast<std::size_t>(modes) > point_size) {
    throw ModelError("polynomial uses " + std::to_string(modes) + " mode(s) but the point has " +
                     std::to_string(point_size / 2));
  }
}

}  // namespace

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw ModelError("cannot convert a non-finite value to a rational");
  Rational r(x);
  r.canonicalize();
  return r;
}

GradedCoeff evaluate(const PhasePoly& f, std::span<const Rational> point) {
  require_dimension(f.mode_count(), point.size());
  GradedCoeff sum;
  for (const auto& [m, c] : f.terms()) {
    Rational value(1);
    const auto& exps = m.exponents();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      for (std::uint32_t e = 0; e < exps[v]; ++e) value *= point[v];
    }
    sum += c * GradedCoeff::from_rational(value);
  }
  return sum;
}

std::complex<double> evaluate(const NumericPhasePoly& f, std::span<const double> point) {
  require_dimension(f.mode_count(), point.size());
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double value = 1.0;
    const auto& exps = m.exponents();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v]) value *= std::pow(point[v], static_cast<int>(exps[v]));
    }
    sum += c * value;
  }
  return sum;
}

std::complex<double> evaluate_numeric(const PhasePoly& f, std::span<const double> point, double hbar) {
  std::vector<Rational> exact;
  exact.reserve(point.size());
  for (double x : point) exact.push_back(exact_rational(x));
  return evaluate(f, exact).evaluate(hbar);
}

NumericPhasePoly to_numeric(const PhasePoly& f, double hbar) {
  NumericPhasePoly out;
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.evaluate(hbar));
  return out;
}

NumericPhasePoly compose_linear(const NumericPhasePoly& f, std::span<const double> matrix, std::size_t dim) {
  if (matrix.size() != dim * dim) throw ModelError("compose_linear: matrix size does not match dimension");
  require_dimension(f.mode_count(), dim);
  std::vector<NumericPhasePoly> images(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double a = matrix[j * dim + k];
      if (a != 0.0) images[j] += NumericPhasePoly::variable(PhaseVar::from_index(static_cast<std::uint32_t>(k))) * std::complex<double>(a);
    }
  }
  NumericPhasePoly out;
  for (const auto& [m, c] : f.terms()) {
    NumericPhasePoly term(c);
    const auto& exps = m.exponents();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      for (std::uint32_t e = 0; e < exps[v]; ++e) term = term * images[v];
    }
    out += term;
  }
  return out;
}

std::complex<double> expectation_time_evolved(const NumericPhasePoly& f_at_t, const PhasePoint& center, double hbar) {
  if (!(hbar > 0)) throw ModelError("hbar must be positive");
  return evaluate(smooth(f_at_t, std::complex<double>(hbar)), center.coords);
}

OperatorPoly quantize_symmetric(const PhasePoly& f) {
  OperatorPoly out;
  for (const auto& [m, c] : f.terms()) out += quantize_symmetric(m) * c;
  return out;
}

}  // namespace ordquant
