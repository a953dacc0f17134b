#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ordquant/operator_poly.hpp"
#include "ordquant/phase_poly.hpp"

namespace ordquant {

// Width convention used throughout: smoothing with sigma averages against a
// Gaussian exp(-x^2 / sigma) per coordinate, i.e. variance sigma / 2. With
// sigma = hbar this is the coherent-state variance hbar / 2.

template <class C>
BasicPhasePoly<C> derivative(const BasicPhasePoly<C>& f, std::uint32_t var_index) {
  BasicPhasePoly<C> out;
  for (const auto& [m, c] : f.terms()) {
    const auto e = m.exponent(var_index);
    if (e == 0) continue;
    out.add_term(m.with_exponent(var_index, e - 1), c * CoeffTraits<C>::from_int(e));
  }
  return out;
}

/// Sum of second derivatives over every variable present.
template <class C>
BasicPhasePoly<C> laplacian(const BasicPhasePoly<C>& f) {
  BasicPhasePoly<C> out;
  for (const auto& [m, c] : f.terms()) {
    const auto& exps = m.exponents();
    for (std::uint32_t v = 0; v < exps.size(); ++v) {
      const auto e = exps[v];
      if (e < 2) continue;
      out.add_term(m.with_exponent(v, e - 2), c * CoeffTraits<C>::from_int(static_cast<long>(e) * (e - 1)));
    }
  }
  return out;
}

/// Mixed derivative sum_i d_qi d_pi.
template <class C>
BasicPhasePoly<C> mixed_derivative(const BasicPhasePoly<C>& f) {
  BasicPhasePoly<C> out;
  for (const auto& [m, c] : f.terms()) {
    const auto& exps = m.exponents();
    for (std::uint32_t mode = 0; 2 * mode + 1 < exps.size(); ++mode) {
      const auto eq = exps[2 * mode];
      const auto ep = exps[2 * mode + 1];
      if (eq == 0 || ep == 0) continue;
      out.add_term(m.with_exponent(2 * mode, eq - 1).with_exponent(2 * mode + 1, ep - 1),
                   c * CoeffTraits<C>::from_int(static_cast<long>(eq) * ep));
    }
  }
  return out;
}

/// Applies sum_j weight(j) * D^j f for a linear operator D that strictly
/// lowers degree, stopping once D^j f vanishes.
template <class C, class Op, class Weight>
BasicPhasePoly<C> apply_series(const BasicPhasePoly<C>& f, Op&& op, Weight&& weight) {
  BasicPhasePoly<C> out;
  BasicPhasePoly<C> power = f;
  for (unsigned j = 0; !power.is_zero(); ++j) {
    out += power * weight(j);
    power = op(power);
  }
  return out;
}

/// exp((sigma/4) laplacian) f = sum_j (sigma/4)^j / j! laplacian^j f.
template <class C>
BasicPhasePoly<C> smooth(const BasicPhasePoly<C>& f, const C& sigma) {
  using T = CoeffTraits<C>;
  const C quarter_sigma = sigma * T::from_rational(Rational(1, 4));
  C w = T::from_int(1);
  return apply_series(f, [](const BasicPhasePoly<C>& g) { return laplacian(g); },
                      [&](unsigned j) {
                        if (j > 0) w = w * quarter_sigma * T::from_rational(Rational(1, j));
                        return w;
                      });
}

/// exp(-(sigma/4) laplacian) f; exact inverse of smooth on polynomials.
template <class C>
BasicPhasePoly<C> inverse_smooth(const BasicPhasePoly<C>& f, const C& sigma) {
  return smooth(f, C(-sigma));
}

/// exp((i hbar / 2) sum_i d_qi d_pi) f.
template <class C>
BasicPhasePoly<C> weyl_mixed_factor(const BasicPhasePoly<C>& f, const C& hbar) {
  using T = CoeffTraits<C>;
  const C step = T::i() * hbar * T::from_rational(Rational(1, 2));
  C w = T::from_int(1);
  return apply_series(f, [](const BasicPhasePoly<C>& g) { return mixed_derivative(g); },
                      [&](unsigned j) {
                        if (j > 0) w = w * step * T::from_rational(Rational(1, j));
                        return w;
                      });
}

/// sin((hbar/2) D) / (hbar/2) f with D = sum_i d_qi d_pi:
///   sum_j (-1)^j (hbar/2)^(2j) / (2j+1)! D^(2j+1) f.
template <class C>
BasicPhasePoly<C> sinc_commutator(const BasicPhasePoly<C>& f, const C& hbar) {
  using T = CoeffTraits<C>;
  const C half = hbar * T::from_rational(Rational(1, 2));
  const C step = -(half * half);
  BasicPhasePoly<C> out;
  BasicPhasePoly<C> odd = mixed_derivative(f);
  C w = T::from_int(1);
  for (unsigned j = 0; !odd.is_zero(); ++j) {
    if (j > 0) w = w * step * T::from_rational(Rational(1, (2 * j) * (2 * j + 1)));
    out += odd * w;
    odd = mixed_derivative(mixed_derivative(odd));
  }
  return out;
}

/// Exact evaluation at a rational point; hbar grades stay symbolic.
GradedCoeff evaluate(const PhasePoly& f, std::span<const Rational> point);

/// Numeric evaluation at a double point.
std::complex<double> evaluate(const NumericPhasePoly& f, std::span<const double> point);

/// Evaluates an exact polynomial at a double point for a concrete hbar. The
/// point is converted to rationals exactly and all rational arithmetic is
/// finished before the single conversion to floating point.
std::complex<double> evaluate_numeric(const PhasePoly& f, std::span<const double> point, double hbar);

/// Rational image of a double (exact; doubles are dyadic rationals).
Rational exact_rational(double x);

/// Coefficients evaluated at a concrete hbar.
NumericPhasePoly to_numeric(const PhasePoly& f, double hbar);

/// f(M x) for a 2N x 2N row-major matrix M: every variable x_j is replaced by
/// sum_k M[j][k] x_k.
NumericPhasePoly compose_linear(const NumericPhasePoly& f, std::span<const double> matrix, std::size_t dim);

/// Gaussian-smoothed value of an already time-evolved classical function at
/// the center: smooth(f, hbar) evaluated at center.
std::complex<double> expectation_time_evolved(const NumericPhasePoly& f_at_t, const PhasePoint& center, double hbar);

/// Symmetric quantization extended linearly to a polynomial.
OperatorPoly quantize_symmetric(const PhasePoly& f);

}  // namespace ordquant
