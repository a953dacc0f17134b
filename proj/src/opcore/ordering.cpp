#include "ordquant/ordering.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "ordquant/bosonic.hpp"
#include "ordquant/errors.hpp"

namespace ordquant {

namespace {

// Per-mode exponents (a of the left generator, b of the right one).
struct ModeExponents {
  std::uint32_t mode;
  std::uint32_t left;
  std::uint32_t right;
};

using CommutativeTerms = std::map<std::pair<std::uint32_t, std::uint32_t>, GradedCoeff>;

void accumulate(CommutativeTerms& into, std::pair<std::uint32_t, std::uint32_t> key, const GradedCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

GradedCoeff integer_coeff(const mpz_class& z) { return GradedCoeff(GaussianRational(Rational(z))); }

GradedCoeff inverse_factorial(unsigned k) {
  Rational r(1);
  r /= Rational(factorial(k));
  return GradedCoeff(GaussianRational(r));
}

// Returns the ordered letter key (mode, 0 for left / 1 for right).
std::pair<std::uint32_t, int> letter_key(const Generator& g, const OrderedPair& pair) {
  return {g.mode, g.kind == pair.left ? 0 : 1};
}

OperatorPoly convert_family(const OperatorPoly& x, OrderTarget target) {
  const bool canonical_target = target == OrderTarget::qp || target == OrderTarget::pq;
  if (canonical_target && x.uses_family(KindFamily::bosonic)) return to_canonical(x);
  if (!canonical_target && x.uses_family(KindFamily::canonical)) return to_bosonic(x);
  return x;
}

GradedCoeff bracket(const Generator& x, const Generator& y, const CommutationRules& rules) {
  // [x, y] for two distinct generators of one mode.
  if (x.kind == Kind::Q && y.kind == Kind::P) return rules.q_p;
  if (x.kind == Kind::P && y.kind == Kind::Q) return -rules.q_p;
  if (x.kind == Kind::A && y.kind == Kind::Adag) return rules.a_adag;
  if (x.kind == Kind::Adag && y.kind == Kind::A) return -rules.a_adag;
  return {};
}

std::vector<ModeExponents> split_ordered(const Word& w, const OrderedPair& pair) {
  std::vector<ModeExponents> out;
  for (const auto& f : w.factors()) {
    if (out.empty() || out.back().mode != f.gen.mode) out.push_back({f.gen.mode, 0, 0});
    (f.gen.kind == pair.left ? out.back().left : out.back().right) += f.exp;
  }
  return out;
}

Word build_ordered(const std::vector<ModeExponents>& parts, const OrderedPair& pair) {
  Word w;
  for (const auto& p : parts) {
    w.append({p.mode, pair.left}, p.left);
    w.append({p.mode, pair.right}, p.right);
  }
  return w;
}

// Tensor product of per-mode commutative expansions into ordered words.
OperatorPoly assemble_modes(const std::vector<std::pair<std::uint32_t, CommutativeTerms>>& per_mode,
                            const GradedCoeff& scale, const OrderedPair& pair) {
  std::vector<std::pair<std::vector<ModeExponents>, GradedCoeff>> partial{{{}, scale}};
  for (const auto& [mode, terms] : per_mode) {
    std::vector<std::pair<std::vector<ModeExponents>, GradedCoeff>> next;
    next.reserve(partial.size() * terms.size());
    for (const auto& [parts, c] : partial) {
      for (const auto& [ab, coeff] : terms) {
        auto p = parts;
        p.push_back({mode, ab.first, ab.second});
        next.emplace_back(std::move(p), c * coeff);
      }
    }
    partial = std::move(next);
  }
  OperatorPoly out;
  for (const auto& [parts, c] : partial) out.add_term(build_ordered(parts, pair), c);
  return out;
}

// Rewrite worklist key: highest degree first, then most inversions. Every
// rewrite produces words that are strictly smaller in this order, so each
// distinct word is expanded exactly once.
struct PendingKey {
  std::uint32_t degree;
  std::uint64_t inversions;
  Word word;
};

struct PendingOrder {
  bool operator()(const PendingKey& a, const PendingKey& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.inversions != b.inversions) return a.inversions > b.inversions;
    return WordOrder{}(a.word, b.word);
  }
};

std::uint64_t inversions(const Word& w, const OrderedPair& pair) {
  std::uint64_t total = 0;
  const auto& fs = w.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto ki = letter_key(fs[i].gen, pair);
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (ki > letter_key(fs[j].gen, pair)) total += std::uint64_t{fs[i].exp} * fs[j].exp;
    }
  }
  return total;
}

}  // namespace

std::string_view to_string(OrderTarget t) {
  switch (t) {
    case OrderTarget::qp: return "qp";
    case OrderTarget::pq: return "pq";
    case OrderTarget::normal: return "normal";
    case OrderTarget::antinormal: return "antinormal";
  }
  return "?";
}

OrderedPair ordered_pair(OrderTarget t) {
  switch (t) {
    case OrderTarget::qp: return {Kind::Q, Kind::P};
    case OrderTarget::pq: return {Kind::P, Kind::Q};
    case OrderTarget::normal: return {Kind::Adag, Kind::A};
    case OrderTarget::antinormal: return {Kind::A, Kind::Adag};
  }
  return {Kind::Q, Kind::P};
}

bool is_ordered(const OperatorPoly& x, OrderTarget target) {
  const auto pair = ordered_pair(target);
  for (const auto& [w, c] : x.terms()) {
    const auto& fs = w.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].gen.kind != pair.left && fs[i].gen.kind != pair.right) return false;
      if (i > 0 && letter_key(fs[i - 1].gen, pair) > letter_key(fs[i].gen, pair)) return false;
    }
  }
  return true;
}

OperatorPoly canonicalize(const OperatorPoly& x, OrderTarget target, const CommutationRules& rules) {
  const auto pair = ordered_pair(target);
  const OperatorPoly input = convert_family(x, target);

  std::map<PendingKey, GradedCoeff, PendingOrder> pending;
  auto push = [&](Word w, const GradedCoeff& c) {
    if (c.is_zero()) return;
    PendingKey key{w.degree(), inversions(w, pair), std::move(w)};
    auto [it, inserted] = pending.emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [w, c] : input.terms()) push(w, c);

  OperatorPoly out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key().word;
    const GradedCoeff& c = node.mapped();
    if (node.key().inversions == 0) {
      out.add_term(w, c);
      continue;
    }
    const auto& fs = w.factors();
    std::size_t i = 0;
    while (letter_key(fs[i].gen, pair) <= letter_key(fs[i + 1].gen, pair)) ++i;

    const Generator x_gen = fs[i].gen;
    const Generator y_gen = fs[i + 1].gen;
    auto prefix = [&](Word& into) {
      for (std::size_t j = 0; j < i; ++j) into.append(fs[j].gen, fs[j].exp);
    };
    auto suffix = [&](Word& into) {
      for (std::size_t j = i + 2; j < fs.size(); ++j) into.append(fs[j].gen, fs[j].exp);
    };

    if (x_gen.mode != y_gen.mode) {
      Word swapped;
      prefix(swapped);
      swapped.append(y_gen, fs[i + 1].exp);
      swapped.append(x_gen, fs[i].exp);
      suffix(swapped);
      push(std::move(swapped), c);
      continue;
    }

    // X^a Y^b -> X^(a-1) (Y X + [X, Y]) Y^(b-1)
    Word moved;
    prefix(moved);
    moved.append(x_gen, fs[i].exp - 1);
    moved.append(y_gen, 1);
    moved.append(x_gen, 1);
    moved.append(y_gen, fs[i + 1].exp - 1);
    suffix(moved);
    push(std::move(moved), c);

    Word contracted;
    prefix(contracted);
    contracted.append(x_gen, fs[i].exp - 1);
    contracted.append(y_gen, fs[i + 1].exp - 1);
    suffix(contracted);
    push(std::move(contracted), c * bracket(x_gen, y_gen, rules));
  }
  return out;
}

OperatorPoly canonicalize_closed_form(const OperatorPoly& x, OrderTarget target) {
  const auto pair = ordered_pair(target);
  const OperatorPoly input = convert_family(x, target);
  const GradedCoeff c = bracket({0, pair.left}, {0, pair.right}, CommutationRules{});
  const GradedCoeff minus_c = -c;

  OperatorPoly out;
  for (const auto& [w, coeff] : input.terms()) {
    std::map<std::uint32_t, std::vector<Factor>> by_mode;
    for (const auto& f : w.factors()) by_mode[f.gen.mode].push_back(f);

    std::vector<std::pair<std::uint32_t, CommutativeTerms>> per_mode;
    for (const auto& [mode, factors] : by_mode) {
      CommutativeTerms cur{{{0u, 0u}, GradedCoeff(1)}};
      for (const auto& f : factors) {
        if (f.gen.kind == pair.right) {
          CommutativeTerms next;
          for (const auto& [ab, v] : cur) accumulate(next, {ab.first, ab.second + f.exp}, v);
          cur = std::move(next);
          continue;
        }
        // L^a R^b L^e = L^a sum_k (-c)^k/k! b!/(b-k)! e!/(e-k)! L^(e-k) R^(b-k)
        CommutativeTerms next;
        for (const auto& [ab, v] : cur) {
          const auto [a, b] = ab;
          const unsigned kmax = std::min(b, f.exp);
          GradedCoeff ck(1);
          for (unsigned k = 0; k <= kmax; ++k) {
            const GradedCoeff weight =
                ck * inverse_factorial(k) * integer_coeff(falling_factorial(b, k) * falling_factorial(f.exp, k));
            accumulate(next, {a + f.exp - k, b - k}, v * weight);
            ck *= minus_c;
          }
        }
        cur = std::move(next);
      }
      per_mode.emplace_back(mode, std::move(cur));
    }
    out += assemble_modes(per_mode, coeff, pair);
  }
  return out;
}

OperatorPoly ordering_superop(const OperatorPoly& ordered, OrderTarget target, const GradedCoeff& c) {
  const auto pair = ordered_pair(target);
  if (!is_ordered(ordered, target)) {
    throw Error("ordering_superop: input is not in " + std::string(to_string(target)) + " order");
  }
  const GradedCoeff half_minus_c = -c * GradedCoeff::rational(1, 2);

  OperatorPoly out;
  for (const auto& [w, coeff] : ordered.terms()) {
    std::vector<std::pair<std::uint32_t, CommutativeTerms>> per_mode;
    for (const auto& part : split_ordered(w, pair)) {
      CommutativeTerms terms;
      GradedCoeff ck(1);
      for (unsigned k = 0; k <= std::min(part.left, part.right); ++k) {
        const GradedCoeff weight = ck * inverse_factorial(k) *
                                   integer_coeff(falling_factorial(part.left, k) * falling_factorial(part.right, k));
        accumulate(terms, {part.left - k, part.right - k}, weight);
        ck *= half_minus_c;
      }
      per_mode.emplace_back(part.mode, std::move(terms));
    }
    out += assemble_modes(per_mode, coeff, pair);
  }
  return out;
}

OperatorPoly displacement_form(std::uint32_t n, std::uint32_t m, OrderTarget target, const GradedCoeff& c,
                               std::uint32_t mode) {
  const auto pair = ordered_pair(target);
  const GradedCoeff half_minus_c = -c * GradedCoeff::rational(1, 2);
  CommutativeTerms f{{{0u, m}, GradedCoeff(1)}};
  for (std::uint32_t step = 0; step < n; ++step) {
    CommutativeTerms next;
    for (const auto& [ab, v] : f) {
      accumulate(next, {ab.first + 1, ab.second}, v);
      if (ab.second > 0) {
        accumulate(next, {ab.first, ab.second - 1}, v * half_minus_c * GradedCoeff(static_cast<long>(ab.second)));
      }
    }
    f = std::move(next);
  }
  return assemble_modes({{mode, f}}, GradedCoeff(1), pair);
}

OperatorPoly quantize_symmetric(const PhaseMonomial& mono) {
  Word w;
  for (std::uint32_t mode = 0; mode < mono.mode_count(); ++mode) {
    w.append({mode, Kind::Q}, mono.exponent(PhaseVar{mode, Coord::q}));
    w.append({mode, Kind::P}, mono.exponent(PhaseVar{mode, Coord::p}));
  }
  return ordering_superop(OperatorPoly(w), OrderTarget::qp, GradedCoeff::i_hbar());
}

OperatorPoly symmetrize_bruteforce(std::uint32_t n, std::uint32_t m, std::uint32_t bound,
                                   const CommutationRules& rules) {
  if (n + m > bound) {
    throw SizeError("symmetrize_bruteforce: n + m = " + std::to_string(n + m) + " exceeds bound " +
                    std::to_string(bound));
  }
  std::vector<int> letters(n, 0);
  letters.insert(letters.end(), m, 1);
  OperatorPoly sum;
  do {
    Word w;
    for (int l : letters) w.append({0, l == 0 ? Kind::Q : Kind::P});
    sum.add_term(w, GradedCoeff(1));
  } while (std::next_permutation(letters.begin(), letters.end()));

  Rational weight(1);
  weight /= Rational(binomial(n + m, n));
  return canonicalize(sum, OrderTarget::qp, rules) * GradedCoeff(GaussianRational(weight));
}

}  // namespace ordquant
