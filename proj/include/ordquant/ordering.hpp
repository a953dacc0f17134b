#pragma once

#include <cstdint>
#include <string_view>

#include "ordquant/operator_poly.hpp"
#include "ordquant/phase_monomial.hpp"

namespace ordquant {

/// Target ordering. QP / PQ act on the canonical pair, normal / antinormal on
/// the bosonic pair; inputs in the other family are converted first.
enum class OrderTarget { qp, pq, normal, antinormal };

std::string_view to_string(OrderTarget t);

/// The c-number commutators used by the rewrite path. Defaults are the
/// physical ones; other values exist only for fault-injection checks.
struct CommutationRules {
  GradedCoeff q_p = GradedCoeff::i_hbar();  // [Q, P]
  GradedCoeff a_adag = GradedCoeff(1);      // [A, Adag]
};

/// Left / right generator kinds of a target ordering.
struct OrderedPair {
  Kind left;
  Kind right;
};
OrderedPair ordered_pair(OrderTarget t);

/// True when every word lists modes in increasing order and, per mode, all
/// left generators precede all right generators.
bool is_ordered(const OperatorPoly& x, OrderTarget target);

/// Reorders by repeated application of the single rule YX = XY - [X, Y]
/// (adjacent letters, one swap at a time).
OperatorPoly canonicalize(const OperatorPoly& x, OrderTarget target, const CommutationRules& rules = {});

/// Reorders with the closed-form exchange
///   R^m L^n = sum_k (-c)^k / k! * m!/(m-k)! * n!/(n-k)! L^(n-k) R^(m-k),
/// c = [L, R], folding each mode's subword left to right. Independent of
/// canonicalize(); both must agree exactly.
OperatorPoly canonicalize_closed_form(const OperatorPoly& x, OrderTarget target);

/// Ordering super-operator S_{L,R} = exp(-(c/2) d_L d_R), applied per mode to
/// an input already ordered with L left of R. Words are treated as commuting
/// monomials L^a R^b.
OperatorPoly ordering_superop(const OperatorPoly& ordered, OrderTarget target, const GradedCoeff& c);

/// (L - (c/2) d_R)^n R^m computed by applying the shifted operand n times to
/// R^m, with L and d_R commuting. Single mode.
OperatorPoly displacement_form(std::uint32_t n, std::uint32_t m, OrderTarget target, const GradedCoeff& c,
                               std::uint32_t mode = 0);

/// QP-ordered form of the totally symmetric operator of a monomial, via the
/// S-series (per mode, independent across modes).
OperatorPoly quantize_symmetric(const PhaseMonomial& mono);

/// Average of all distinct arrangements of n Q's and m P's, canonicalized to
/// QP order by rewriting. Throws SizeError when n + m > bound.
OperatorPoly symmetrize_bruteforce(std::uint32_t n, std::uint32_t m, std::uint32_t bound = 10,
                                   const CommutationRules& rules = {});

}  // namespace ordquant
