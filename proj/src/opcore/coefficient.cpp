#include "ordquant/coefficient.hpp"

#include <cmath>
#include <sstream>

namespace ordquant {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GradedCoeff::GradedCoeff(GaussianRational v, int grade) {
  if (!v.is_zero()) terms_.push_back({std::move(v), grade});
}

GradedCoeff GradedCoeff::rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return {GaussianRational(r), 0};
}

GradedCoeff GradedCoeff::hbar() { return {GaussianRational(2), 2}; }

GradedCoeff GradedCoeff::i_hbar() { return {GaussianRational(0, 2), 2}; }

GaussianRational GradedCoeff::at_grade(int grade) const {
  for (const auto& t : terms_) {
    if (t.grade == grade) return t.value;
  }
  return {};
}

void GradedCoeff::add_term(const GaussianRational& v, int grade) {
  auto it = terms_.begin();
  while (it != terms_.end() && it->grade < grade) ++it;
  if (it != terms_.end() && it->grade == grade) {
    it->value += v;
    if (it->value.is_zero()) terms_.erase(it);
  } else if (!v.is_zero()) {
    terms_.insert(it, ExactCoefficient{v, grade});
  }
}

GradedCoeff& GradedCoeff::operator+=(const GradedCoeff& o) {
  for (const auto& t : o.terms_) add_term(t.value, t.grade);
  return *this;
}

GradedCoeff& GradedCoeff::operator-=(const GradedCoeff& o) {
  for (const auto& t : o.terms_) add_term(-t.value, t.grade);
  return *this;
}

GradedCoeff operator*(const GradedCoeff& a, const GradedCoeff& b) {
  GradedCoeff out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.add_term(x.value * y.value, x.grade + y.grade);
  }
  return out;
}

GradedCoeff& GradedCoeff::operator*=(const GradedCoeff& o) {
  *this = *this * o;
  return *this;
}

GradedCoeff GradedCoeff::operator-() const {
  GradedCoeff out = *this;
  for (auto& t : out.terms_) t.value = -t.value;
  return out;
}

GradedCoeff GradedCoeff::conj() const {
  GradedCoeff out = *this;
  for (auto& t : out.terms_) t.value = t.value.conj();
  return out;
}

std::complex<double> GradedCoeff::evaluate(double hbar) const {
  const double eta = std::sqrt(hbar / 2.0);
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) sum += t.value.to_complex() * std::pow(eta, t.grade);
  return sum;
}

std::string GradedCoeff::debug_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    os << "(" << terms_[k].value.re.get_str() << " + " << terms_[k].value.im.get_str() << "i)";
    if (terms_[k].grade != 0) os << "*eta^" << terms_[k].grade;
  }
  return os.str();
}

GradedCoeff pow(const GradedCoeff& base, unsigned exponent) {
  GradedCoeff out(1);
  GradedCoeff b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class out = 1;
  for (unsigned j = 0; j < k; ++j) out *= (n - j);
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace ordquant
