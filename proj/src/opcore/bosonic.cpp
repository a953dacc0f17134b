#include "ordquant/bosonic.hpp"

#include <algorithm>
#include <vector>

#include "ordquant/ordering.hpp"

namespace ordquant {

namespace {

// Substitutes each generator by a linear form and multiplies out in order.
template <class Substitute>
OperatorPoly substitute(const OperatorPoly& x, Substitute&& image) {
  OperatorPoly out;
  for (const auto& [w, c] : x.terms()) {
    OperatorPoly acc(c);
    for (const auto& f : w.factors()) {
      const OperatorPoly g = image(f.gen);
      for (std::uint32_t e = 0; e < f.exp; ++e) acc = acc * g;
    }
    out += acc;
  }
  return out;
}

}  // namespace

OperatorPoly to_bosonic(const OperatorPoly& x) {
  const GradedCoeff eta = GradedCoeff::eta();
  const GradedCoeff i_eta = GradedCoeff::i() * eta;
  return substitute(x, [&](const Generator& g) {
    switch (g.kind) {
      case Kind::Q: return eta * (OperatorPoly::A(g.mode) + OperatorPoly::Adag(g.mode));
      case Kind::P: return i_eta * (OperatorPoly::Adag(g.mode) - OperatorPoly::A(g.mode));
      default: return OperatorPoly::generator(g);
    }
  });
}

OperatorPoly to_canonical(const OperatorPoly& x) {
  const GradedCoeff half_inv_eta = GradedCoeff::rational(1, 2) * GradedCoeff::eta(-1);
  const GradedCoeff i = GradedCoeff::i();
  return substitute(x, [&](const Generator& g) {
    switch (g.kind) {
      case Kind::A: return half_inv_eta * (OperatorPoly::Q(g.mode) + i * OperatorPoly::P(g.mode));
      case Kind::Adag: return half_inv_eta * (OperatorPoly::Q(g.mode) - i * OperatorPoly::P(g.mode));
      default: return OperatorPoly::generator(g);
    }
  });
}

OperatorPoly to_normal_order(const OperatorPoly& x) { return canonicalize(x, OrderTarget::normal); }

OperatorPoly symmetric_normal_form(const PhaseMonomial& mono) {
  // Per mode: commuting expansion in (alpha*, alpha) keyed by (a*, a) exponents.
  using Terms = std::map<std::pair<std::uint32_t, std::uint32_t>, GradedCoeff>;
  auto add = [](Terms& t, std::pair<std::uint32_t, std::uint32_t> key, const GradedCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  };

  std::vector<std::pair<std::uint32_t, Terms>> per_mode;
  for (std::uint32_t mode = 0; mode < mono.mode_count(); ++mode) {
    const std::uint32_t n = mono.exponent(PhaseVar{mode, Coord::q});
    const std::uint32_t m = mono.exponent(PhaseVar{mode, Coord::p});
    if (n == 0 && m == 0) continue;

    // q^n p^m = eta^(n+m) i^m sum_k sum_l C(n,k) C(m,l) (-1)^(m-l) alpha*^(k+l) alpha^(n-k+m-l)
    const GradedCoeff z = pow(GradedCoeff::i(), m) * GradedCoeff::eta(static_cast<int>(n + m));
    Terms symbol;
    for (std::uint32_t k = 0; k <= n; ++k) {
      for (std::uint32_t l = 0; l <= m; ++l) {
        mpz_class w = binomial(n, k) * binomial(m, l);
        if ((m - l) % 2) w = -w;
        add(symbol, {k + l, n - k + m - l}, z * GradedCoeff(GaussianRational(Rational(w))));
      }
    }

    // exp((1/2) d_alpha d_alpha*)
    Terms normal;
    for (const auto& [ab, c] : symbol) {
      const auto [a, b] = ab;
      Rational half_pow(1);
      for (std::uint32_t j = 0; j <= std::min(a, b); ++j) {
        Rational w = half_pow * Rational(falling_factorial(a, j) * falling_factorial(b, j));
        w /= Rational(factorial(j));
        add(normal, {a - j, b - j}, c * GradedCoeff(GaussianRational(w)));
        half_pow /= 2;
      }
    }
    per_mode.emplace_back(mode, std::move(normal));
  }

  OperatorPoly out(GradedCoeff(1));
  for (const auto& [mode, terms] : per_mode) {
    OperatorPoly factor;
    for (const auto& [ab, c] : terms) {
      Word w;
      w.append({mode, Kind::Adag}, ab.first);
      w.append({mode, Kind::A}, ab.second);
      factor.add_term(w, c);
    }
    out = out * factor;
  }
  return out;
}

}  // namespace ordquant
