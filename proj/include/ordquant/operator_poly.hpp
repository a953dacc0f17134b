#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ordquant/coefficient.hpp"

namespace ordquant {

enum class Kind : std::uint8_t { Q = 0, P = 1, A = 2, Adag = 3 };

enum class KindFamily : std::uint8_t { canonical, bosonic };

inline KindFamily family_of(Kind k) { return k == Kind::Q || k == Kind::P ? KindFamily::canonical : KindFamily::bosonic; }

struct Generator {
  std::uint32_t mode = 0;
  Kind kind = Kind::Q;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Factor {
  Generator gen;
  std::uint32_t exp = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Noncommutative monomial: an ordered product of generator powers. Adjacent
/// equal generators are merged, exponents are >= 1, and the empty word is the
/// identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Factor> factors);
  static Word of(Generator g, std::uint32_t exp = 1) { return Word{{g, exp}}; }

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::uint32_t degree() const;
  /// Appends g^exp, merging with the last factor when the generator matches.
  /// Throws KindMismatchError when g's family conflicts with an earlier
  /// factor on the same mode.
  void append(Generator g, std::uint32_t exp = 1);
  /// Family used on each mode, if any.
  std::map<std::uint32_t, KindFamily> families() const;
  /// Letters in reverse order (the formal adjoint of a word, coefficient aside).
  Word reversed() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded-lexicographic order: total degree descending, then the expanded
/// letter sequence compared by (mode, kind) ascending.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

/// Sum of words with exact graded coefficients. Zero coefficients are never
/// stored; iteration follows WordOrder.
class OperatorPoly {
 public:
  using TermMap = std::map<Word, GradedCoeff, WordOrder>;

  OperatorPoly() = default;
  OperatorPoly(const GradedCoeff& scalar);
  OperatorPoly(const Word& w, const GradedCoeff& c = GradedCoeff(1));
  static OperatorPoly generator(Generator g, std::uint32_t exp = 1) { return {Word::of(g, exp)}; }
  static OperatorPoly Q(std::uint32_t mode = 0) { return generator({mode, Kind::Q}); }
  static OperatorPoly P(std::uint32_t mode = 0) { return generator({mode, Kind::P}); }
  static OperatorPoly A(std::uint32_t mode = 0) { return generator({mode, Kind::A}); }
  static OperatorPoly Adag(std::uint32_t mode = 0) { return generator({mode, Kind::Adag}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GradedCoeff coefficient(const Word& w) const;
  std::uint32_t degree() const;
  /// Family used on each mode across all words.
  std::map<std::uint32_t, KindFamily> families() const;
  bool uses_family(KindFamily f) const;

  void add_term(const Word& w, const GradedCoeff& c);

  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly operator-() const;
  OperatorPoly& operator*=(const GradedCoeff& c);

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(OperatorPoly a, const GradedCoeff& c) { return a *= c; }
  friend OperatorPoly operator*(const GradedCoeff& c, OperatorPoly a) { return a *= c; }
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Noncommutative product by word concatenation; no reordering is performed.
/// Throws KindMismatchError when the operands use different generator
/// families on the same mode.
OperatorPoly multiply(const OperatorPoly& x, const OperatorPoly& y);
inline OperatorPoly operator*(const OperatorPoly& x, const OperatorPoly& y) { return multiply(x, y); }

OperatorPoly pow(const OperatorPoly& x, unsigned exponent);

/// x y - y x, left in concatenated (uncanonicalized) form.
OperatorPoly commutator(const OperatorPoly& x, const OperatorPoly& y);

/// Formal adjoint: reverse every word and conjugate every coefficient. The
/// generators are treated as self-adjoint (Q, P); for bosonic words A and
/// Adag are exchanged.
OperatorPoly adjoint(const OperatorPoly& x);

}  // namespace ordquant
