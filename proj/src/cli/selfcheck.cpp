#include "ordquant/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "ordquant/coherent.hpp"
#include "ordquant/expr.hpp"
#include "ordquant/ordering.hpp"
#include "ordquant/oscillator.hpp"
#include "ordquant/smoothing.hpp"

namespace ordquant {

namespace {

CommutationRules rules_for(const SelfcheckOptions& o) {
  CommutationRules r;
  if (o.corrupt_commutator) {
    r.q_p = GradedCoeff(2) * GradedCoeff::i_hbar();
    r.a_adag = GradedCoeff(2);
  }
  return r;
}

void record(SuiteResult& s, bool ok, const std::function<std::string()>& describe) {
  ++s.total;
  if (ok) {
    ++s.passed;
  } else if (!s.counterexample) {
    s.counterexample = describe();
  }
}

std::vector<std::vector<Rational>> sample_centers(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<std::vector<Rational>> out;
  for (std::size_t c = 0; c < count; ++c) {
    Rational q(num(rng), den(rng));
    Rational p(num(rng), den(rng));
    q.canonicalize();
    p.canonicalize();
    out.push_back({q, p});
  }
  return out;
}

std::string center_text(const std::vector<Rational>& c) { return "(" + c[0].get_str() + ", " + c[1].get_str() + ")"; }

// <x> in a coherent state via normal ordering under the given rules.
GradedCoeff expect_with(const OperatorPoly& x, const std::vector<Rational>& center, const CommutationRules& rules) {
  return coherent_expectation_normal(canonicalize(x, OrderTarget::normal, rules), center);
}

std::string coeff_text(const GradedCoeff& c) { return render(PhasePoly(c)); }

SuiteResult suite_symmetrize(const SelfcheckOptions& o) {
  SuiteResult s{"symmetrize"};
  const auto rules = rules_for(o);
  for (std::uint32_t total = 0; total <= 6; ++total) {
    for (std::uint32_t n = 0; n <= total; ++n) {
      const std::uint32_t m = total - n;
      const OperatorPoly fast = quantize_symmetric(PhaseMonomial::qp(n, m));
      const OperatorPoly brute = symmetrize_bruteforce(n, m, 10, rules);
      record(s, fast == brute, [&] {
        return render(PhasePoly::monomial(PhaseMonomial::qp(n, m))) + ": super-operator gives " + render(fast) +
               ", arrangement average gives " + render(brute);
      });
    }
  }
  return s;
}

OperatorPoly random_operator_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> length(0, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> grade(0, 2);
  const KindFamily fam[2] = {coin(rng) ? KindFamily::canonical : KindFamily::bosonic,
                             coin(rng) ? KindFamily::canonical : KindFamily::bosonic};
  OperatorPoly out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Word w;
    const int len = length(rng);
    for (int j = 0; j < len; ++j) {
      const std::uint32_t mode = coin(rng);
      const int which = coin(rng);
      Kind kind = fam[mode] == KindFamily::canonical ? (which ? Kind::P : Kind::Q) : (which ? Kind::Adag : Kind::A);
      w.append({mode, kind});
    }
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out.add_term(w, GradedCoeff(GaussianRational(c), grade(rng)));
  }
  return out;
}

SuiteResult suite_ordering(const SelfcheckOptions& o) {
  SuiteResult s{"ordering"};
  const auto rules = rules_for(o);
  std::mt19937_64 rng(20240611);
  const OrderTarget targets[] = {OrderTarget::qp, OrderTarget::pq, OrderTarget::normal, OrderTarget::antinormal};
  for (int c = 0; c < 100; ++c) {
    const OperatorPoly x = random_operator_poly(rng);
    const OrderTarget target = targets[c % 4];
    const OperatorPoly a = canonicalize(x, target, rules);
    const OperatorPoly b = canonicalize_closed_form(x, target);
    record(s, a == b, [&] {
      return render(x) + " -> " + std::string(to_string(target)) + ": rewriting gives " + render(a) +
             ", closed form gives " + render(b);
    });
  }
  return s;
}

SuiteResult suite_symmetric_expectation(const SelfcheckOptions& o) {
  SuiteResult s{"symmetric-expectation"};
  const auto rules = rules_for(o);
  const auto centers = sample_centers(4, 9);
  for (std::uint32_t n = 0; n <= 4; ++n) {
    for (std::uint32_t m = 0; m <= 4; ++m) {
      const PhasePoly f = PhasePoly::monomial(PhaseMonomial::qp(n, m));
      const OperatorPoly x = quantize_symmetric(PhaseMonomial::qp(n, m));
      const PhasePoly smoothed = smooth(f, GradedCoeff::hbar());
      for (const auto& c : centers) {
        const GradedCoeff lhs = expect_with(x, c, rules);
        const GradedCoeff rhs = evaluate(smoothed, c);
        record(s, lhs == rhs, [&] {
          return "<S(" + render(f) + ")> at " + center_text(c) + ": " + coeff_text(lhs) + " vs smoothed " +
                 coeff_text(rhs);
        });
      }
    }
  }
  return s;
}

SuiteResult suite_word_expectation(const SelfcheckOptions& o) {
  SuiteResult s{"word-expectation"};
  const auto rules = rules_for(o);
  const auto centers = sample_centers(3, 11);
  for (std::uint32_t n = 0; n <= 4; ++n) {
    for (std::uint32_t m = 0; m <= 4; ++m) {
      const PhasePoly f = PhasePoly::monomial(PhaseMonomial::qp(n, m));
      const OperatorPoly x = pow(OperatorPoly::Q(), n) * pow(OperatorPoly::P(), m);
      const PhasePoly weyl = smooth(weyl_mixed_factor(f, GradedCoeff::hbar()), GradedCoeff::hbar());
      for (const auto& c : centers) {
        const GradedCoeff lhs = expect_with(x, c, rules);
        const GradedCoeff rhs = evaluate(weyl, c);
        record(s, lhs == rhs, [&] {
          return "<" + render(x) + "> at " + center_text(c) + ": " + coeff_text(lhs) + " vs " + coeff_text(rhs);
        });
      }
    }
  }
  return s;
}

SuiteResult suite_commutator_expectation(const SelfcheckOptions& o) {
  SuiteResult s{"commutator-expectation"};
  const auto rules = rules_for(o);
  const auto centers = sample_centers(3, 12);
  for (std::uint32_t n = 0; n <= 4; ++n) {
    for (std::uint32_t m = 0; m <= 4; ++m) {
      const PhasePoly f = PhasePoly::monomial(PhaseMonomial::qp(n, m));
      const OperatorPoly x = commutator(pow(OperatorPoly::Q(), n), pow(OperatorPoly::P(), m));
      const PhasePoly sinc = smooth(sinc_commutator(f, GradedCoeff::hbar()), GradedCoeff::hbar());
      for (const auto& c : centers) {
        const GradedCoeff lhs = expect_with(x, c, rules);
        const GradedCoeff rhs = GradedCoeff::i_hbar() * evaluate(sinc, c);
        record(s, lhs == rhs, [&] {
          return "<[Q^" + std::to_string(n) + ", P^" + std::to_string(m) + "]> at " + center_text(c) + ": " +
                 coeff_text(lhs) + " vs " + coeff_text(rhs);
        });
      }
    }
  }
  return s;
}

SuiteResult suite_laplacian(const SelfcheckOptions&) {
  SuiteResult s{"laplacian"};
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  std::uniform_real_distribution<double> freq(0.5, 2.0);
  std::uniform_real_distribution<double> coupling(0.0, 0.3);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  for (int c = 0; c < 24; ++c) {
    OscillatorModel m;
    m.n_modes = 1 + c % 3;
    m.k = 1 + c % 4;
    m.g = coupling(rng);
    m.hbar = 0.1;
    for (int i = 0; i < m.n_modes; ++i) m.omega.push_back(freq(rng));
    for (int i = 0; i < 2 * m.n_modes; ++i) m.center.coords.push_back(coord(rng));
    const double t = time(rng);
    const auto closed = trajectory_laplacian(m, t);
    const auto ad = trajectory_laplacian_autodiff(m, m.center.coords, t);
    double err = 0.0;
    double scale = 1.0;
    for (std::size_t j = 0; j < closed.size(); ++j) {
      err = std::max(err, std::abs(closed[j] - ad[j]));
      scale = std::max(scale, std::abs(ad[j]));
    }
    record(s, err <= 1e-9 * scale, [&] {
      return "N=" + std::to_string(m.n_modes) + " k=" + std::to_string(m.k) + " t=" + std::to_string(t) +
             ": closed form and autodiff differ by " + std::to_string(err);
    });
  }
  return s;
}

using SuiteFn = SuiteResult (*)(const SelfcheckOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"symmetrize", suite_symmetrize},
      {"ordering", suite_ordering},
      {"symmetric-expectation", suite_symmetric_expectation},
      {"word-expectation", suite_word_expectation},
      {"commutator-expectation", suite_commutator_expectation},
      {"laplacian", suite_laplacian}};
  return all;
}

}  // namespace

const std::vector<std::string>& selfcheck_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options) {
  const auto& names = selfcheck_suite_names();
  if (!options.filter.empty() && std::find(names.begin(), names.end(), options.filter) == names.end()) {
    throw std::invalid_argument("unknown suite '" + options.filter + "'");
  }
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites()) {
    if (options.filter.empty() || options.filter == name) out.push_back(fn(options));
  }
  return out;
}

}  // namespace ordquant
