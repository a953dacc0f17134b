#include "ordquant/phase_monomial.hpp"

#include <algorithm>
#include <numeric>

namespace ordquant {

PhaseMonomial::PhaseMonomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

PhaseMonomial PhaseMonomial::qp(std::uint32_t n, std::uint32_t m, std::uint32_t mode) {
  std::vector<std::uint32_t> e(2 * mode + 2, 0);
  e[2 * mode] = n;
  e[2 * mode + 1] = m;
  return PhaseMonomial(std::move(e));
}

PhaseMonomial PhaseMonomial::var(PhaseVar v, std::uint32_t power) {
  std::vector<std::uint32_t> e(v.index() + 1, 0);
  e[v.index()] = power;
  return PhaseMonomial(std::move(e));
}

std::uint32_t PhaseMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

PhaseMonomial PhaseMonomial::with_exponent(std::uint32_t index, std::uint32_t power) const {
  PhaseMonomial out = *this;
  if (out.exps_.size() <= index) out.exps_.resize(index + 1, 0);
  out.exps_[index] = power;
  out.trim();
  return out;
}

PhaseMonomial operator*(const PhaseMonomial& a, const PhaseMonomial& b) {
  PhaseMonomial out = a.exps_.size() >= b.exps_.size() ? a : b;
  const PhaseMonomial& other = a.exps_.size() >= b.exps_.size() ? b : a;
  for (std::size_t i = 0; i < other.exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

void PhaseMonomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

bool PhaseMonomialOrder::operator()(const PhaseMonomial& a, const PhaseMonomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  // Expanded letter sequences: variable index repeated exponent times. The
  // first differing letter decides; a sequence that runs out of a variable
  // earlier moves on to a larger index.
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  const std::size_t n = std::max(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto xa = i < ea.size() ? ea[i] : 0u;
    const auto xb = i < eb.size() ? eb[i] : 0u;
    if (xa != xb) return xa > xb;
  }
  return false;
}

}  // namespace ordquant
