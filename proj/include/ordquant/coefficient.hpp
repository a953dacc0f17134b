#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace ordquant {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussianRational(long v) : re(v), im(0) {}

  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// One graded term: value * eta^grade, where eta = sqrt(hbar/2).
///
/// The grading unit is sqrt(hbar/2) rather than sqrt(hbar) so that the
/// quadrature substitution Q = eta (A + Adag) and the coherent amplitude
/// alpha = (q + i p) / (2 eta) stay inside the Gaussian rationals. An integer
/// power hbar^j is grade 2j with value 2^j.
struct ExactCoefficient {
  GaussianRational value;
  int grade = 0;

  friend bool operator==(const ExactCoefficient&, const ExactCoefficient&) = default;
};

/// Finite sum of ExactCoefficients with distinct grades; the coefficient ring
/// of every exact polynomial in the library. Terms are sorted by grade and
/// never zero.
class GradedCoeff {
 public:
  GradedCoeff() = default;
  GradedCoeff(long v) : GradedCoeff(GaussianRational(v), 0) {}
  GradedCoeff(GaussianRational v, int grade = 0);

  static GradedCoeff rational(long num, long den = 1);
  static GradedCoeff from_rational(const Rational& r) { return {GaussianRational(r), 0}; }
  static GradedCoeff i() { return {GaussianRational::i(), 0}; }
  /// sqrt(hbar/2).
  static GradedCoeff eta(int power = 1) { return {GaussianRational(1), power}; }
  /// hbar = 2 eta^2.
  static GradedCoeff hbar();
  /// i * hbar, the canonical commutator [Q, P].
  static GradedCoeff i_hbar();

  const std::vector<ExactCoefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].grade == 0); }
  /// Lowest and highest grade present; 0 for the zero coefficient.
  int min_grade() const { return terms_.empty() ? 0 : terms_.front().grade; }
  int max_grade() const { return terms_.empty() ? 0 : terms_.back().grade; }
  /// Coefficient at a given grade (zero if absent).
  GaussianRational at_grade(int grade) const;

  GradedCoeff conj() const;
  /// Numeric value for a concrete hbar > 0.
  std::complex<double> evaluate(double hbar) const;

  GradedCoeff& operator+=(const GradedCoeff& o);
  GradedCoeff& operator-=(const GradedCoeff& o);
  GradedCoeff& operator*=(const GradedCoeff& o);
  GradedCoeff operator-() const;

  friend GradedCoeff operator+(GradedCoeff a, const GradedCoeff& b) { return a += b; }
  friend GradedCoeff operator-(GradedCoeff a, const GradedCoeff& b) { return a -= b; }
  friend GradedCoeff operator*(const GradedCoeff& a, const GradedCoeff& b);
  friend bool operator==(const GradedCoeff& a, const GradedCoeff& b) { return a.terms_ == b.terms_; }

  std::string debug_string() const;

 private:
  void add_term(const GaussianRational& v, int grade);
  std::vector<ExactCoefficient> terms_;
};

GradedCoeff pow(const GradedCoeff& base, unsigned exponent);

/// n! as an exact integer.
mpz_class factorial(unsigned n);
/// n! / (n - k)!, zero when k > n.
mpz_class falling_factorial(unsigned n, unsigned k);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace ordquant
