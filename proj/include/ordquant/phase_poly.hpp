#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ordquant/coefficient.hpp"
#include "ordquant/phase_monomial.hpp"

namespace ordquant {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<GradedCoeff> {
  static bool is_zero(const GradedCoeff& c) { return c.is_zero(); }
  static GradedCoeff from_rational(const Rational& r) { return GradedCoeff::from_rational(r); }
  static GradedCoeff from_int(long v) { return GradedCoeff(v); }
  static GradedCoeff i() { return GradedCoeff::i(); }
};

template <>
struct CoeffTraits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }
  static std::complex<double> from_rational(const Rational& r) { return r.get_d(); }
  static std::complex<double> from_int(long v) { return static_cast<double>(v); }
  static std::complex<double> i() { return {0.0, 1.0}; }
};

/// Commutative polynomial over (q1, p1, ..., qN, pN). Zero coefficients are
/// never stored; iteration follows PhaseMonomialOrder.
template <class C>
class BasicPhasePoly {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;
  using TermMap = std::map<PhaseMonomial, C, PhaseMonomialOrder>;

  BasicPhasePoly() = default;
  BasicPhasePoly(const C& constant) { add_term(PhaseMonomial{}, constant); }
  BasicPhasePoly(const PhaseMonomial& m, const C& c) { add_term(m, c); }
  static BasicPhasePoly monomial(const PhaseMonomial& m) { return BasicPhasePoly(m, Traits::from_int(1)); }
  static BasicPhasePoly variable(PhaseVar v) { return monomial(PhaseMonomial::var(v)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  std::uint32_t mode_count() const {
    std::uint32_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.mode_count());
    return n;
  }
  C coefficient(const PhaseMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(const PhaseMonomial& m, const C& c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicPhasePoly& operator+=(const BasicPhasePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPhasePoly& operator-=(const BasicPhasePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPhasePoly operator-() const {
    BasicPhasePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  BasicPhasePoly& operator*=(const C& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    TermMap scaled;
    for (const auto& [m, c] : terms_) {
      C v = c * s;
      if (!Traits::is_zero(v)) scaled.emplace(m, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend BasicPhasePoly operator+(BasicPhasePoly a, const BasicPhasePoly& b) { return a += b; }
  friend BasicPhasePoly operator-(BasicPhasePoly a, const BasicPhasePoly& b) { return a -= b; }
  friend BasicPhasePoly operator*(BasicPhasePoly a, const C& s) { return a *= s; }
  friend BasicPhasePoly operator*(const C& s, BasicPhasePoly a) { return a *= s; }
  friend BasicPhasePoly operator*(const BasicPhasePoly& a, const BasicPhasePoly& b) {
    BasicPhasePoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  friend bool operator==(const BasicPhasePoly& a, const BasicPhasePoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Exact polynomial; coefficients may carry symbolic hbar grades.
using PhasePoly = BasicPhasePoly<GradedCoeff>;
/// Double-precision complex coefficients.
using NumericPhasePoly = BasicPhasePoly<std::complex<double>>;

template <class C>
BasicPhasePoly<C> pow(const BasicPhasePoly<C>& x, unsigned exponent) {
  BasicPhasePoly<C> out(CoeffTraits<C>::from_int(1));
  for (unsigned k = 0; k < exponent; ++k) out = out * x;
  return out;
}

/// Phase-space point (q1, p1, ..., qN, pN).
struct PhasePoint {
  std::vector<double> coords;

  std::size_t modes() const { return coords.size() / 2; }
  double q(std::size_t mode) const { return coords[2 * mode]; }
  double p(std::size_t mode) const { return coords[2 * mode + 1]; }
};

/// Validates a point: even length, finite entries. Throws ModelError.
PhasePoint make_phase_point(std::vector<double> coords);

}  // namespace ordquant
