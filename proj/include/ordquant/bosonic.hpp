#pragma once

#include "ordquant/operator_poly.hpp"
#include "ordquant/phase_monomial.hpp"

namespace ordquant {

/// Substitutes Q = eta (A + Adag), P = i eta (Adag - A), eta = sqrt(hbar/2).
/// Word order is preserved; bosonic words pass through unchanged.
OperatorPoly to_bosonic(const OperatorPoly& x);

/// Inverse substitution A = (Q + i P) / (2 eta), Adag = (Q - i P) / (2 eta).
OperatorPoly to_canonical(const OperatorPoly& x);

/// Adag left of A on every mode; canonical inputs are converted first.
OperatorPoly to_normal_order(const OperatorPoly& x);

/// Normal-ordered form of the symmetric quantization of a monomial, computed
/// without any operator rewriting: expand q^n p^m as a binomial double sum in
/// the commuting amplitudes (alpha, alpha*), apply exp((1/2) d_alpha d_alpha*),
/// and read alpha*^a alpha^b as Adag^a A^b.
OperatorPoly symmetric_normal_form(const PhaseMonomial& mono);

}  // namespace ordquant
