#include "ordquant/expr.hpp"

#include <cctype>
#include <optional>
#include <map>

#include "ordquant/errors.hpp"

namespace ordquant {

namespace {

constexpr long kMaxExponent = 64;
constexpr std::uint32_t kMaxMode = 1024;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  return pos;
}

Rational parse_number(const std::string& lexeme) {
  auto slash = lexeme.find('/');
  if (slash != std::string::npos) {
    mpz_class num(lexeme.substr(0, slash));
    mpz_class den(lexeme.substr(slash + 1));
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = lexeme.find('.');
  if (dot == std::string::npos) return Rational(mpz_class(lexeme));
  const std::string frac = lexeme.substr(dot + 1);
  mpz_class num(lexeme.substr(0, dot) + frac);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct Decoded {
  enum class Kind { symbol, constant, unknown } kind;
  ExprSymbol symbol{};
  ExprConstant::Name constant{};
};

Decoded decode_identifier(const std::string& id, std::size_t offset) {
  if (id == "i") return {Decoded::Kind::constant, {}, ExprConstant::Name::i};
  if (id == "hbar") return {Decoded::Kind::constant, {}, ExprConstant::Name::hbar};
  if (id == "shbar") return {Decoded::Kind::constant, {}, ExprConstant::Name::shbar};

  std::size_t split = 0;
  while (split < id.size() && is_alpha(id[split])) ++split;
  const std::string stem = id.substr(0, split);
  const std::string digits = id.substr(split);

  static const std::pair<const char*, ExprSymbol::Name> names[] = {
      {"q", ExprSymbol::Name::q}, {"p", ExprSymbol::Name::p}, {"Q", ExprSymbol::Name::Q},
      {"P", ExprSymbol::Name::P}, {"a", ExprSymbol::Name::a}, {"ad", ExprSymbol::Name::ad}};
  std::optional<ExprSymbol::Name> name;
  for (const auto& [s, n] : names) {
    if (stem == s) name = n;
  }
  if (!name) return {Decoded::Kind::unknown};
  if (digits.empty()) return {Decoded::Kind::symbol, {*name, 0}};
  if (digits[0] == '0' || scan_digits(digits, 0) != digits.size()) return {Decoded::Kind::unknown};
  if (digits.size() > 4 || std::stoul(digits) > kMaxMode) {
    throw ParseError("mode index " + digits + " exceeds " + std::to_string(kMaxMode), offset + split, {});
  }
  return {Decoded::Kind::symbol, {*name, static_cast<std::uint32_t>(std::stoul(digits) - 1)}};
}

bool is_phase_symbol(ExprSymbol::Name n) { return n == ExprSymbol::Name::q || n == ExprSymbol::Name::p; }

std::string token_text(const Token& t) { return t.kind == Token::Kind::end ? "end of input" : "'" + t.lexeme + "'"; }

class Parser {
 public:
  Parser(std::string_view text, ExprDomain domain) : tokens_(tokenize(text)), domain_(domain) {}

  ExprAst parse() {
    ExprAst root = expr();
    if (peek().kind != Token::Kind::end) {
      throw ParseError("unexpected " + token_text(peek()), peek().offset, {"'+'", "'-'", "'*'", "'^'", "end of input"});
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::op && peek().lexeme[0] == c; }

  ExprAst expr() {
    ExprAst first = term();
    if (!at_op('+') && !at_op('-')) return first;
    ExprAst sum{ExprAst::Node::sum, first.offset};
    sum.children.push_back(std::move(first));
    while (at_op('+') || at_op('-')) {
      const Token& op = take();
      ExprAst rhs = term();
      if (op.lexeme[0] == '-') {
        ExprAst neg{ExprAst::Node::negation, op.offset};
        neg.children.push_back(std::move(rhs));
        rhs = std::move(neg);
      }
      sum.children.push_back(std::move(rhs));
    }
    return sum;
  }

  ExprAst term() {
    ExprAst first = factor();
    if (!at_op('*')) return first;
    ExprAst product{ExprAst::Node::product, first.offset};
    product.children.push_back(std::move(first));
    while (at_op('*')) {
      take();
      product.children.push_back(factor());
    }
    return product;
  }

  ExprAst factor() {
    ExprAst b = base();
    if (peek().kind != Token::Kind::caret) return b;
    take();
    const bool negative_ok = b.node == ExprAst::Node::constant &&
                             (b.constant.name == ExprConstant::Name::hbar || b.constant.name == ExprConstant::Name::shbar);
    bool negative = false;
    if (negative_ok && at_op('-')) {
      take();
      negative = true;
    }
    const Token& num = peek();
    if (num.kind != Token::Kind::number || num.lexeme.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("exponent must be an unsigned integer", num.offset, {"unsigned integer"});
    }
    take();
    if (num.lexeme.size() > 3 || std::stol(num.lexeme) > kMaxExponent) {
      throw ParseError("exponent " + num.lexeme + " exceeds " + std::to_string(kMaxExponent), num.offset, {});
    }
    ExprAst power{ExprAst::Node::power, b.offset};
    power.exponent = negative ? -std::stol(num.lexeme) : std::stol(num.lexeme);
    power.children.push_back(std::move(b));
    return power;
  }

  ExprAst base() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::lparen: {
        take();
        ExprAst inner = expr();
        if (peek().kind != Token::Kind::rparen) {
          throw ParseError("unbalanced parenthesis, found " + token_text(peek()), peek().offset, {"')'"});
        }
        take();
        return inner;
      }
      case Token::Kind::op:
        if (t.lexeme[0] == '-') {
          take();
          ExprAst neg{ExprAst::Node::negation, t.offset};
          neg.children.push_back(factor());
          return neg;
        }
        break;
      case Token::Kind::number: {
        take();
        ExprAst c{ExprAst::Node::constant, t.offset};
        c.constant = {ExprConstant::Name::number, parse_number(t.lexeme)};
        return c;
      }
      case Token::Kind::identifier:
        take();
        return identifier(t);
      default:
        break;
    }
    throw ParseError("unexpected " + token_text(t), t.offset, {"variable", "constant", "'('", "'-'"});
  }

  ExprAst identifier(const Token& t) {
    const Decoded d = decode_identifier(t.lexeme, t.offset);
    if (d.kind == Decoded::Kind::unknown) {
      throw ParseError("unknown identifier '" + t.lexeme + "'", t.offset, {"variable", "constant"});
    }
    if (d.kind == Decoded::Kind::constant) {
      ExprAst c{ExprAst::Node::constant, t.offset};
      c.constant = {d.constant, Rational(0)};
      return c;
    }
    const bool phase = is_phase_symbol(d.symbol.name);
    if (phase && domain_ == ExprDomain::operator_) {
      throw ParseError("mode error: phase-space variable '" + t.lexeme + "' in an operator expression", t.offset,
                       {"operator symbol (Q, P, a, ad)"});
    }
    if (!phase && domain_ == ExprDomain::phase) {
      throw ParseError("mode error: operator symbol '" + t.lexeme + "' in a phase-space expression", t.offset,
                       {"phase-space variable (q, p)"});
    }
    ExprAst v{ExprAst::Node::variable, t.offset};
    v.symbol = d.symbol;
    return v;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ExprDomain domain_;
};

GradedCoeff constant_value(const ExprConstant& c, long exponent = 1) {
  switch (c.name) {
    case ExprConstant::Name::i:
      return pow(GradedCoeff::i(), static_cast<unsigned>(exponent));
    case ExprConstant::Name::shbar:
      return GradedCoeff::eta(static_cast<int>(exponent));
    case ExprConstant::Name::hbar: {
      // hbar^e = 2^e eta^(2e)
      Rational scale = 1;
      for (long j = 0; j < std::labs(exponent); ++j) scale *= 2;
      if (exponent < 0) scale = 1 / scale;
      return GradedCoeff(GaussianRational(scale), static_cast<int>(2 * exponent));
    }
    case ExprConstant::Name::number:
      return pow(GradedCoeff::from_rational(c.value), static_cast<unsigned>(exponent));
  }
  return {};
}

// mul and add receive the offset of the right operand for error reporting.
template <class Poly, class Leaf, class Mul, class Add>
Poly build(const ExprAst& n, const Leaf& leaf, const Mul& mul, const Add& add) {
  switch (n.node) {
    case ExprAst::Node::sum: {
      Poly out;
      for (const auto& c : n.children) out = add(out, build<Poly>(c, leaf, mul, add), c.offset);
      return out;
    }
    case ExprAst::Node::product: {
      Poly out = build<Poly>(n.children.front(), leaf, mul, add);
      for (std::size_t j = 1; j < n.children.size(); ++j) {
        out = mul(out, build<Poly>(n.children[j], leaf, mul, add), n.children[j].offset);
      }
      return out;
    }
    case ExprAst::Node::power: {
      const ExprAst& b = n.children.front();
      if (b.node == ExprAst::Node::constant) return Poly(constant_value(b.constant, n.exponent));
      const Poly x = build<Poly>(b, leaf, mul, add);
      Poly out(GradedCoeff(1));
      for (long k = 0; k < n.exponent; ++k) out = mul(out, x, b.offset);
      return out;
    }
    case ExprAst::Node::negation:
      return -build<Poly>(n.children.front(), leaf, mul, add);
    case ExprAst::Node::variable:
      return leaf(n.symbol);
    case ExprAst::Node::constant:
      return Poly(constant_value(n.constant));
  }
  return {};
}

// ---- rendering ----

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '*';
    out += p;
  }
  return out;
}

std::string power_text(const std::string& name, long e) { return e == 1 ? name : name + "^" + std::to_string(e); }

// One coefficient grade as (scalar, symbolic factor).
std::pair<GaussianRational, std::string> split_grade(const ExactCoefficient& t) {
  if (t.grade % 2 != 0) return {t.value, power_text("shbar", t.grade)};
  const int j = t.grade / 2;
  if (j == 0) return {t.value, ""};
  Rational scale = 1;
  for (int m = 0; m < std::abs(j); ++m) scale *= 2;
  if (j > 0) scale = 1 / scale;
  return {t.value * GaussianRational(scale), power_text("hbar", j)};
}

struct TermWriter {
  std::string out;

  void add(const GaussianRational& s, std::vector<std::string> factors) {
    bool negative = false;
    std::string coef;
    if (sgn(s.im) == 0) {
      negative = sgn(s.re) < 0;
      const Rational mag = abs(s.re);
      if (mag != 1 || factors.empty()) coef = mag.get_str();
    } else if (sgn(s.re) == 0) {
      negative = sgn(s.im) < 0;
      const Rational mag = abs(s.im);
      coef = mag == 1 ? "i" : mag.get_str() + "*i";
    } else {
      const Rational mag = abs(s.im);
      coef = "(" + s.re.get_str() + (sgn(s.im) < 0 ? " - " : " + ") + (mag == 1 ? "i" : mag.get_str() + "*i") + ")";
    }
    if (!coef.empty()) factors.insert(factors.begin(), coef);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += join(factors);
  }

  void add_coefficient(const GradedCoeff& c, const std::vector<std::string>& body) {
    for (const auto& t : c.terms()) {
      auto [s, sym] = split_grade(t);
      std::vector<std::string> factors;
      if (!sym.empty()) factors.push_back(sym);
      factors.insert(factors.end(), body.begin(), body.end());
      add(s, std::move(factors));
    }
  }

  std::string str() const { return out.empty() ? "0" : out; }
};

std::string mode_suffix(std::uint32_t mode, bool multi) { return multi ? std::to_string(mode + 1) : ""; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (is_alpha(c)) {
      while (pos < text.size() && (is_alpha(text[pos]) || is_digit(text[pos]))) ++pos;
      tokens.push_back({Token::Kind::identifier, std::string(text.substr(start, pos - start)), start});
    } else if (is_digit(c)) {
      pos = scan_digits(text, pos);
      if (pos < text.size() && (text[pos] == '.' || text[pos] == '/')) {
        const char sep = text[pos];
        const std::size_t after = scan_digits(text, pos + 1);
        if (after == pos + 1) {
          throw ParseError(std::string("malformed number: digits must follow '") + sep + "'", pos + 1, {"digit"});
        }
        pos = after;
      }
      const std::string lexeme(text.substr(start, pos - start));
      if (auto slash = lexeme.find('/'); slash != std::string::npos && mpz_class(lexeme.substr(slash + 1)) == 0) {
        throw ParseError("division by zero in rational literal", start + slash + 1, {});
      }
      tokens.push_back({Token::Kind::number, lexeme, start});
    } else if (c == '+' || c == '-' || c == '*') {
      tokens.push_back({Token::Kind::op, std::string(1, c), start});
      ++pos;
    } else if (c == '(') {
      tokens.push_back({Token::Kind::lparen, "(", start});
      ++pos;
    } else if (c == ')') {
      tokens.push_back({Token::Kind::rparen, ")", start});
      ++pos;
    } else if (c == '^') {
      tokens.push_back({Token::Kind::caret, "^", start});
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start,
                       {"variable", "constant", "operator", "parenthesis"});
    }
  }
  tokens.push_back({Token::Kind::end, "", text.size()});
  return tokens;
}

ExprAst parse_ast(std::string_view text, ExprDomain domain) { return Parser(text, domain).parse(); }

PhasePoly parse_phase_expr(std::string_view text) {
  const ExprAst ast = parse_ast(text, ExprDomain::phase);
  auto leaf = [](const ExprSymbol& s) {
    return PhasePoly::variable({s.mode, s.name == ExprSymbol::Name::q ? Coord::q : Coord::p});
  };
  auto mul = [](const PhasePoly& a, const PhasePoly& b, std::size_t) { return a * b; };
  auto add = [](const PhasePoly& a, const PhasePoly& b, std::size_t) { return a + b; };
  return build<PhasePoly>(ast, leaf, mul, add);
}

OperatorPoly parse_operator_expr(std::string_view text) {
  const ExprAst ast = parse_ast(text, ExprDomain::operator_);
  auto leaf = [](const ExprSymbol& s) {
    switch (s.name) {
      case ExprSymbol::Name::Q:
        return OperatorPoly::Q(s.mode);
      case ExprSymbol::Name::P:
        return OperatorPoly::P(s.mode);
      case ExprSymbol::Name::a:
        return OperatorPoly::A(s.mode);
      default:
        return OperatorPoly::Adag(s.mode);
    }
  };
  auto mul = [](const OperatorPoly& a, const OperatorPoly& b, std::size_t offset) {
    try {
      return multiply(a, b);
    } catch (const KindMismatchError& e) {
      throw ParseError(std::string("mode error: ") + e.what(), offset, {});
    }
  };
  auto add = [](const OperatorPoly& a, const OperatorPoly& b, std::size_t offset) {
    const auto left = a.families();
    for (const auto& [mode, fam] : b.families()) {
      if (auto it = left.find(mode); it != left.end() && it->second != fam) {
        throw ParseError("mode error: mode " + std::to_string(mode + 1) + " mixes {Q,P} with {a,ad}", offset, {});
      }
    }
    return a + b;
  };
  return build<OperatorPoly>(ast, leaf, mul, add);
}

ExprDomain classify_expr(std::string_view text) {
  for (const Token& t : tokenize(text)) {
    if (t.kind != Token::Kind::identifier) continue;
    const Decoded d = decode_identifier(t.lexeme, t.offset);
    if (d.kind == Decoded::Kind::symbol) return is_phase_symbol(d.symbol.name) ? ExprDomain::phase : ExprDomain::operator_;
  }
  return ExprDomain::phase;
}

std::string render(const PhasePoly& f) {
  std::uint32_t modes = f.mode_count();
  const bool multi = modes > 1;
  TermWriter w;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::string> body;
    for (std::uint32_t idx = 0; idx < m.exponents().size(); ++idx) {
      const std::uint32_t e = m.exponent(idx);
      if (e == 0) continue;
      const PhaseVar v = PhaseVar::from_index(idx);
      body.push_back(power_text((v.coord == Coord::q ? "q" : "p") + mode_suffix(v.mode, multi), e));
    }
    w.add_coefficient(c, body);
  }
  return w.str();
}

std::string render(const OperatorPoly& x) {
  bool multi = false;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& f : w.factors()) multi = multi || f.gen.mode != 0;
  }
  TermWriter w;
  for (const auto& [word, c] : x.terms()) {
    std::vector<std::string> body;
    for (const auto& f : word.factors()) {
      static const char* names[] = {"Q", "P", "a", "ad"};
      body.push_back(power_text(names[static_cast<int>(f.gen.kind)] + mode_suffix(f.gen.mode, multi), f.exp));
    }
    w.add_coefficient(c, body);
  }
  return w.str();
}

}  // namespace ordquant
