#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ordquant {

enum class Coord : std::uint8_t { q = 0, p = 1 };

/// Phase-space variable (mode, q|p). Flat index = 2 * mode + coord, matching
/// the (q1, p1, ..., qN, pN) point layout.
struct PhaseVar {
  std::uint32_t mode = 0;
  Coord coord = Coord::q;

  std::uint32_t index() const { return 2 * mode + static_cast<std::uint32_t>(coord); }
  static PhaseVar from_index(std::uint32_t idx) { return {idx / 2, static_cast<Coord>(idx % 2)}; }
  friend auto operator<=>(const PhaseVar&, const PhaseVar&) = default;
};

/// Commutative monomial over phase-space variables. Exponents are stored
/// densely by flat variable index with trailing zeros trimmed, so equal
/// monomials compare equal.
class PhaseMonomial {
 public:
  PhaseMonomial() = default;
  explicit PhaseMonomial(std::vector<std::uint32_t> exponents);
  /// q_mode^n p_mode^m.
  static PhaseMonomial qp(std::uint32_t n, std::uint32_t m, std::uint32_t mode = 0);
  static PhaseMonomial var(PhaseVar v, std::uint32_t power = 1);

  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t exponent(PhaseVar v) const { return exponent(v.index()); }
  std::uint32_t exponent(std::uint32_t index) const { return index < exps_.size() ? exps_[index] : 0; }
  std::uint32_t degree() const;
  /// Number of modes touched (highest mode + 1); 0 for the constant monomial.
  std::uint32_t mode_count() const { return static_cast<std::uint32_t>((exps_.size() + 1) / 2); }
  bool is_constant() const { return exps_.empty(); }

  PhaseMonomial with_exponent(std::uint32_t index, std::uint32_t power) const;

  friend PhaseMonomial operator*(const PhaseMonomial& a, const PhaseMonomial& b);
  friend bool operator==(const PhaseMonomial&, const PhaseMonomial&) = default;

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
};

/// Display/serialization order: total degree descending, then the expanded
/// letter sequence (q1 < p1 < q2 < ...) lexicographically ascending.
struct PhaseMonomialOrder {
  bool operator()(const PhaseMonomial& a, const PhaseMonomial& b) const;
};

}  // namespace ordquant
