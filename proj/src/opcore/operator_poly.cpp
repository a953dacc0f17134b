#include "ordquant/operator_poly.hpp"

#include <algorithm>
#include <string>

#include "ordquant/errors.hpp"

namespace ordquant {

namespace {

std::string kind_mismatch_message(std::uint32_t mode) {
  return "kind mismatch on mode " + std::to_string(mode + 1) +
         ": {Q,P} and {a,ad} generators cannot be combined without an explicit conversion";
}

void merge_families(std::map<std::uint32_t, KindFamily>& into, const std::map<std::uint32_t, KindFamily>& from) {
  for (const auto& [mode, fam] : from) {
    auto [it, inserted] = into.emplace(mode, fam);
    if (!inserted && it->second != fam) throw KindMismatchError(kind_mismatch_message(mode));
  }
}

}  // namespace

Word::Word(std::initializer_list<Factor> factors) {
  for (const auto& f : factors) append(f.gen, f.exp);
}

std::uint32_t Word::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

void Word::append(Generator g, std::uint32_t exp) {
  if (exp == 0) return;
  for (const auto& f : factors_) {
    if (f.gen.mode == g.mode && family_of(f.gen.kind) != family_of(g.kind)) {
      throw KindMismatchError(kind_mismatch_message(g.mode));
    }
  }
  if (!factors_.empty() && factors_.back().gen == g) {
    factors_.back().exp += exp;
  } else {
    factors_.push_back({g, exp});
  }
}

std::map<std::uint32_t, KindFamily> Word::families() const {
  std::map<std::uint32_t, KindFamily> out;
  for (const auto& f : factors_) out.emplace(f.gen.mode, family_of(f.gen.kind));
  return out;
}

Word Word::reversed() const {
  Word out;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out.append(it->gen, it->exp);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  auto fam = a.families();
  merge_families(fam, b.families());
  Word out = a;
  for (const auto& f : b.factors_) {
    if (!out.factors_.empty() && out.factors_.back().gen == f.gen) {
      out.factors_.back().exp += f.exp;
    } else {
      out.factors_.push_back(f);
    }
  }
  return out;
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t ia = 0, ib = 0;
  std::uint32_t ra = fa.empty() ? 0 : fa[0].exp;
  std::uint32_t rb = fb.empty() ? 0 : fb[0].exp;
  // Walk both expanded letter sequences in lockstep, a run at a time.
  while (ia < fa.size() && ib < fb.size()) {
    if (fa[ia].gen != fb[ib].gen) return fa[ia].gen < fb[ib].gen;
    const auto step = std::min(ra, rb);
    ra -= step;
    rb -= step;
    if (ra == 0 && ++ia < fa.size()) ra = fa[ia].exp;
    if (rb == 0 && ++ib < fb.size()) rb = fb[ib].exp;
  }
  return false;
}

OperatorPoly::OperatorPoly(const GradedCoeff& scalar) { add_term(Word{}, scalar); }

OperatorPoly::OperatorPoly(const Word& w, const GradedCoeff& c) { add_term(w, c); }

GradedCoeff OperatorPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GradedCoeff{} : it->second;
}

std::uint32_t OperatorPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::map<std::uint32_t, KindFamily> OperatorPoly::families() const {
  std::map<std::uint32_t, KindFamily> out;
  for (const auto& [w, c] : terms_) {
    for (const auto& f : w.factors()) out.emplace(f.gen.mode, family_of(f.gen.kind));
  }
  return out;
}

bool OperatorPoly::uses_family(KindFamily fam) const {
  for (const auto& [w, c] : terms_) {
    for (const auto& f : w.factors()) {
      if (family_of(f.gen.kind) == fam) return true;
    }
  }
  return false;
}

void OperatorPoly::add_term(const Word& w, const GradedCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

OperatorPoly& OperatorPoly::operator*=(const GradedCoeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff = coeff * c;
  return *this;
}

OperatorPoly multiply(const OperatorPoly& x, const OperatorPoly& y) {
  auto fam = x.families();
  merge_families(fam, y.families());
  OperatorPoly out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) out.add_term(wx * wy, cx * cy);
  }
  return out;
}

OperatorPoly pow(const OperatorPoly& x, unsigned exponent) {
  OperatorPoly out(GradedCoeff(1));
  for (unsigned k = 0; k < exponent; ++k) out = out * x;
  return out;
}

OperatorPoly commutator(const OperatorPoly& x, const OperatorPoly& y) { return x * y - y * x; }

OperatorPoly adjoint(const OperatorPoly& x) {
  OperatorPoly out;
  for (const auto& [w, c] : x.terms()) {
    Word r;
    const auto& fs = w.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      Generator g = it->gen;
      if (g.kind == Kind::A) {
        g.kind = Kind::Adag;
      } else if (g.kind == Kind::Adag) {
        g.kind = Kind::A;
      }
      r.append(g, it->exp);
    }
    out.add_term(r, c.conj());
  }
  return out;
}

}  // namespace ordquant
