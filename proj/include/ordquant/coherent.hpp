#pragma once

#include <complex>
#include <span>

#include "ordquant/coefficient.hpp"
#include "ordquant/operator_poly.hpp"

namespace ordquant {

/// <alpha1| x |alpha2> / <alpha1|alpha2>: normal-order x, then substitute
/// Adag_j -> conj(alpha1_j), A_j -> alpha2_j. One amplitude per mode; throws
/// ModelError when x touches a mode the spans do not cover or hbar <= 0.
std::complex<double> coherent_matrix_element(const OperatorPoly& x, std::span<const std::complex<double>> alpha1,
                                             std::span<const std::complex<double>> alpha2, double hbar);

/// <alpha0| x |alpha0> with alpha0_j = (q_j + i p_j) / sqrt(2 hbar); center is
/// laid out (q1, p1, q2, p2, ...).
std::complex<double> coherent_expectation(const OperatorPoly& x, std::span<const double> center, double hbar);

/// Same as coherent_expectation with hbar kept symbolic and a rational
/// center; the result is an exact graded coefficient.
GradedCoeff coherent_expectation_exact(const OperatorPoly& x, std::span<const Rational> center);

/// Exact expectation of an already normal-ordered polynomial.
GradedCoeff coherent_expectation_normal(const OperatorPoly& normal, std::span<const Rational> center);

}  // namespace ordquant
