#pragma once

// Reference computations used only by the tests. None of them calls into the
// library's ordering, smoothing or coherent-state code.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "ordquant/coefficient.hpp"
#include "ordquant/operator_poly.hpp"
#include "ordquant/phase_poly.hpp"

namespace oracle {

using ordquant::GradedCoeff;
using ordquant::OperatorPoly;
using ordquant::PhasePoly;
using ordquant::Rational;

/// E[x^j] for x ~ N(0, v) with v given as an exact graded coefficient:
/// v^(j/2) (j-1)!! for even j, zero for odd j.
GradedCoeff gaussian_moment(unsigned j, const GradedCoeff& variance);

/// E[f(center + x)] with independent x_i ~ N(0, sigma/2), expanded coordinate
/// by coordinate through the binomial theorem.
GradedCoeff gaussian_average(const PhasePoly& f, std::span<const Rational> center, const GradedCoeff& sigma);

/// <psi|x|psi> for the minimum-uncertainty Gaussian psi centred at (q0, p0)
/// per mode, computed in the position representation: Q acts as (y + q0),
/// P as -i hbar d/dy + i y + p0 on polynomial prefactors of psi, and the final
/// prefactor is averaged over |psi|^2 (variance hbar/2). Bosonic generators
/// go through A = (Q + iP)/sqrt(2 hbar).
GradedCoeff schrodinger_expectation(const OperatorPoly& x, std::span<const Rational> center);

/// Symmetric (Weyl) form of q^n p^m from the McCoy sum
///   2^-n sum_k C(n,k) Q^k P^m Q^(n-k)
/// as an uncanonicalized word sum.
OperatorPoly mccoy_symmetric(unsigned n, unsigned m);

/// Central-difference Laplacian of a map R^d -> R^d at x.
std::vector<double> fd_laplacian(const std::function<std::vector<double>(const std::vector<double>&)>& map,
                                 const std::vector<double>& x, double h);

/// Gauss-Hermite nodes and weights for the weight exp(-u^2).
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermite gauss_hermite(int n);

/// E[h(center + x)] with density ~ exp(-|x|^2 / sigma), by tensor-product
/// Gauss-Hermite quadrature with n nodes per coordinate.
double gaussian_quadrature(const std::function<double(const std::vector<double>&)>& h,
                           const std::vector<double>& center, double sigma, int n);

// Random inputs for property tests.
Rational random_rational(std::mt19937_64& rng, long max_num = 5, long max_den = 4);
GradedCoeff random_coeff(std::mt19937_64& rng, int max_grade = 2, bool complex_values = true);
PhasePoly random_phase_poly(std::mt19937_64& rng, unsigned max_degree, unsigned modes, unsigned max_terms = 4,
                            int max_grade = 2);
/// Words over `modes` modes; each mode uses one family throughout (canonical
/// unless bosonic is set, or chosen at random when mixed_families is set).
OperatorPoly random_operator_poly(std::mt19937_64& rng, unsigned max_degree, unsigned modes, unsigned max_terms = 4,
                                  bool bosonic = false, bool mixed_families = false, int max_grade = 2);

}  // namespace oracle
