#include "oracles.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace oracle {

using ordquant::GaussianRational;
using ordquant::Kind;
using ordquant::PhaseMonomial;
using ordquant::Word;

GradedCoeff gaussian_moment(unsigned j, const GradedCoeff& variance) {
  if (j % 2 == 1) return GradedCoeff();
  GradedCoeff out(1);
  for (unsigned l = 1; l <= j / 2; ++l) out = out * variance * GradedCoeff(static_cast<long>(2 * l - 1));
  return out;
}

namespace {

Rational rpow(const Rational& x, unsigned e) {
  Rational out = 1;
  for (unsigned k = 0; k < e; ++k) out *= x;
  return out;
}

Rational choose(unsigned n, unsigned k) {
  Rational out = 1;
  for (unsigned j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

GradedCoeff gaussian_average(const PhasePoly& f, std::span<const Rational> center, const GradedCoeff& sigma) {
  const GradedCoeff variance = sigma * GradedCoeff::rational(1, 2);
  GradedCoeff total;
  for (const auto& [mono, coeff] : f.terms()) {
    GradedCoeff term = coeff;
    for (std::uint32_t idx = 0; idx < mono.exponents().size(); ++idx) {
      const unsigned e = mono.exponent(idx);
      if (e == 0) continue;
      const Rational c = idx < center.size() ? center[idx] : Rational(0);
      GradedCoeff factor;
      for (unsigned j = 0; j <= e; ++j) {
        factor += GradedCoeff::from_rational(choose(e, j) * rpow(c, e - j)) * gaussian_moment(j, variance);
      }
      term = term * factor;
    }
    total += term;
  }
  return total;
}

namespace {

// Polynomial prefactor in y_i = x_i - q0_i.
using YPoly = std::map<std::vector<unsigned>, GradedCoeff>;

void add_to(YPoly& p, const std::vector<unsigned>& e, const GradedCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

YPoly apply_q(const YPoly& f, std::size_t mode, const Rational& q0) {
  YPoly out;
  for (const auto& [e, c] : f) {
    auto up = e;
    ++up[mode];
    add_to(out, up, c);
    add_to(out, e, c * GradedCoeff::from_rational(q0));
  }
  return out;
}

YPoly apply_p(const YPoly& f, std::size_t mode, const Rational& p0) {
  const GradedCoeff minus_i_hbar = -(GradedCoeff::i() * GradedCoeff::hbar());
  YPoly out;
  for (const auto& [e, c] : f) {
    if (e[mode] > 0) {
      auto down = e;
      --down[mode];
      add_to(out, down, c * minus_i_hbar * GradedCoeff(static_cast<long>(e[mode])));
    }
    auto up = e;
    ++up[mode];
    add_to(out, up, c * GradedCoeff::i());
    add_to(out, e, c * GradedCoeff::from_rational(p0));
  }
  return out;
}

YPoly combine(const YPoly& a, const YPoly& b, const GradedCoeff& ca, const GradedCoeff& cb) {
  YPoly out;
  for (const auto& [e, c] : a) add_to(out, e, c * ca);
  for (const auto& [e, c] : b) add_to(out, e, c * cb);
  return out;
}

YPoly apply_generator(const YPoly& f, ordquant::Generator g, std::span<const Rational> center) {
  const Rational& q0 = center[2 * g.mode];
  const Rational& p0 = center[2 * g.mode + 1];
  // 1 / (2 eta) = 1/2 eta^-1 with eta = sqrt(hbar/2).
  const GradedCoeff inv = GradedCoeff(GaussianRational(Rational(1, 2)), -1);
  switch (g.kind) {
    case Kind::Q:
      return apply_q(f, g.mode, q0);
    case Kind::P:
      return apply_p(f, g.mode, p0);
    case Kind::A:
      return combine(apply_q(f, g.mode, q0), apply_p(f, g.mode, p0), inv, inv * GradedCoeff::i());
    case Kind::Adag:
      return combine(apply_q(f, g.mode, q0), apply_p(f, g.mode, p0), inv, -(inv * GradedCoeff::i()));
  }
  return {};
}

}  // namespace

GradedCoeff schrodinger_expectation(const OperatorPoly& x, std::span<const Rational> center) {
  const std::size_t modes = center.size() / 2;
  const GradedCoeff variance = GradedCoeff::hbar() * GradedCoeff::rational(1, 2);
  GradedCoeff total;
  for (const auto& [word, coeff] : x.terms()) {
    YPoly f;
    f.emplace(std::vector<unsigned>(modes, 0), GradedCoeff(1));
    const auto& factors = word.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (it->gen.mode >= modes) throw std::invalid_argument("center does not cover every mode");
      for (std::uint32_t k = 0; k < it->exp; ++k) f = apply_generator(f, it->gen, center);
    }
    GradedCoeff avg;
    for (const auto& [e, c] : f) {
      GradedCoeff term = c;
      for (unsigned ei : e) term = term * gaussian_moment(ei, variance);
      avg += term;
    }
    total += coeff * avg;
  }
  return total;
}

OperatorPoly mccoy_symmetric(unsigned n, unsigned m) {
  OperatorPoly out;
  Rational scale = 1;
  for (unsigned j = 0; j < n; ++j) scale /= 2;
  for (unsigned k = 0; k <= n; ++k) {
    Word w;
    if (k) w.append({0, Kind::Q}, k);
    if (m) w.append({0, Kind::P}, m);
    if (n - k) w.append({0, Kind::Q}, n - k);
    out.add_term(w, GradedCoeff::from_rational(scale * choose(n, k)));
  }
  return out;
}

std::vector<double> fd_laplacian(const std::function<std::vector<double>(const std::vector<double>&)>& map,
                                 const std::vector<double>& x, double h) {
  const auto f0 = map(x);
  std::vector<double> out(f0.size(), 0.0);
  for (std::size_t c = 0; c < x.size(); ++c) {
    auto xp = x;
    auto xm = x;
    xp[c] += h;
    xm[c] -= h;
    const auto fp = map(xp);
    const auto fm = map(xm);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += (fp[j] - 2.0 * f0[j] + fm[j]) / (h * h);
  }
  return out;
}

GaussHermite gauss_hermite(int n) {
  constexpr double kEps = 1e-14;
  const double pim4 = std::pow(M_PI, -0.25);
  GaussHermite gh{std::vector<double>(n), std::vector<double>(n)};
  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(n, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * gh.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * gh.nodes[1];
    } else {
      z = 2.0 * z - gh.nodes[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kEps) break;
    }
    gh.nodes[i] = z;
    gh.nodes[n - 1 - i] = -z;
    gh.weights[i] = gh.weights[n - 1 - i] = 2.0 / (pp * pp);
  }
  return gh;
}

double gaussian_quadrature(const std::function<double(const std::vector<double>&)>& h,
                           const std::vector<double>& center, double sigma, int n) {
  const GaussHermite gh = gauss_hermite(n);
  const std::size_t d = center.size();
  const double scale = std::sqrt(sigma);
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  double total = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t c = 0; c < d; ++c) {
      x[c] = center[c] + scale * gh.nodes[idx[c]];
      w *= gh.weights[idx[c]] / std::sqrt(M_PI);
    }
    total += w * h(x);
    std::size_t c = 0;
    while (c < d && ++idx[c] == n) idx[c++] = 0;
    if (c == d) break;
  }
  return total;
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

GradedCoeff random_coeff(std::mt19937_64& rng, int max_grade, bool complex_values) {
  std::uniform_int_distribution<int> grade(0, max_grade);
  GradedCoeff out;
  std::uniform_int_distribution<int> parts(1, 2);
  const int count = parts(rng);
  for (int j = 0; j < count; ++j) {
    const Rational re = random_rational(rng);
    const Rational im = complex_values ? random_rational(rng) : Rational(0);
    out += GradedCoeff(GaussianRational(re, im), grade(rng));
  }
  if (out.is_zero()) out = GradedCoeff(1);
  return out;
}

PhasePoly random_phase_poly(std::mt19937_64& rng, unsigned max_degree, unsigned modes, unsigned max_terms,
                            int max_grade) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<unsigned> var(0, 2 * modes - 1);
  PhasePoly out;
  const unsigned count = terms(rng);
  for (unsigned t = 0; t < count; ++t) {
    std::vector<std::uint32_t> e(2 * modes, 0);
    const unsigned d = degree(rng);
    for (unsigned j = 0; j < d; ++j) ++e[var(rng)];
    out.add_term(PhaseMonomial(e), random_coeff(rng, max_grade));
  }
  return out;
}

OperatorPoly random_operator_poly(std::mt19937_64& rng, unsigned max_degree, unsigned modes, unsigned max_terms,
                                  bool bosonic, bool mixed_families, int max_grade) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<unsigned> mode_dist(0, modes - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<bool> boson(modes, bosonic);
  if (mixed_families) {
    for (unsigned m = 0; m < modes; ++m) boson[m] = coin(rng) == 1;
  }
  OperatorPoly out;
  const unsigned count = terms(rng);
  for (unsigned t = 0; t < count; ++t) {
    Word w;
    const unsigned d = degree(rng);
    for (unsigned j = 0; j < d; ++j) {
      const unsigned mode = mode_dist(rng);
      const bool second = coin(rng) == 1;
      const Kind kind = boson[mode] ? (second ? Kind::Adag : Kind::A) : (second ? Kind::P : Kind::Q);
      w.append({mode, kind});
    }
    out.add_term(w, random_coeff(rng, max_grade));
  }
  return out;
}

}  // namespace oracle
