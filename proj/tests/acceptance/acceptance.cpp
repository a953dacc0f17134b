// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordquant/coherent.hpp"
#include "ordquant/errors.hpp"
#include "ordquant/expr.hpp"
#include "ordquant/liouville.hpp"
#include "ordquant/ordering.hpp"
#include "ordquant/oscillator.hpp"
#include "ordquant/smoothing.hpp"

using namespace ordquant;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = r.ok && in_time;
  if (!pass) ++g_failures;
  std::printf("%s criterion %d: %s | %s | %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", id, title, r.detail.c_str(),
              secs, limit_seconds, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

PhasePoly mono(std::uint32_t n, std::uint32_t m) { return PhasePoly::monomial(PhaseMonomial::qp(n, m)); }

std::vector<Rational> random_center(std::mt19937_64& rng) {
  return {oracle::random_rational(rng, 9, 7), oracle::random_rational(rng, 9, 7)};
}

OscillatorModel model(int n, int k, double g, double hbar, std::vector<double> omega, std::vector<double> center) {
  OscillatorModel m;
  m.n_modes = n;
  m.k = k;
  m.g = g;
  m.hbar = hbar;
  m.omega = std::move(omega);
  m.center = make_phase_point(std::move(center));
  m.validate();
  return m;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int main() {
  criterion(1, "symmetric quantization of q^2*p", 1, [] {
    const std::string s = render(quantize_symmetric(parse_phase_expr("q^2*p")));
    return Outcome{s == "Q^2*P - i*hbar*Q", "rendered '" + s + "'"};
  });

  criterion(2, "super-operator equals arrangement average, n+m <= 8", 10, [] {
    int cases = 0, agree = 0;
    for (std::uint32_t total = 0; total <= 8; ++total) {
      for (std::uint32_t n = 0; n <= total; ++n) {
        ++cases;
        agree += symmetrize_bruteforce(n, total - n) == quantize_symmetric(PhaseMonomial::qp(n, total - n));
      }
    }
    return Outcome{cases == 45 && agree == cases, fmt("%d/%d cases exact", agree, cases)};
  });

  criterion(3, "rewriting canonicalization equals closed form", 30, [] {
    std::mt19937_64 rng(3);
    const OrderTarget targets[] = {OrderTarget::qp, OrderTarget::pq, OrderTarget::normal, OrderTarget::antinormal};
    int agree = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto x = oracle::random_operator_poly(rng, 8, 2, 4, false, true);
      const OrderTarget t = targets[trial % 4];
      agree += canonicalize(x, t) == canonicalize_closed_form(x, t);
    }
    return Outcome{agree == 500, fmt("%d/500 random polynomials exact", agree)};
  });

  criterion(4, "coherent expectation of S(q^n p^m) equals smoothed monomial", 30, [] {
    std::mt19937_64 rng(4);
    std::vector<std::vector<Rational>> centers;
    for (int c = 0; c < 20; ++c) centers.push_back(random_center(rng));
    int checks = 0, agree = 0;
    for (std::uint32_t n = 0; n <= 6; ++n) {
      for (std::uint32_t m = 0; m <= 6; ++m) {
        const auto x = quantize_symmetric(PhaseMonomial::qp(n, m));
        const auto f = smooth(mono(n, m), GradedCoeff::hbar());
        for (const auto& c : centers) {
          ++checks;
          const auto lhs = coherent_expectation_exact(x, c);
          agree += lhs == evaluate(f, c) && lhs == oracle::gaussian_average(mono(n, m), c, GradedCoeff::hbar());
        }
      }
    }
    return Outcome{agree == checks, fmt("%d/%d exact (symbolic hbar)", agree, checks)};
  });

  criterion(5, "raw word and commutator expectations, n,m <= 5", 30, [] {
    std::mt19937_64 rng(5);
    const auto hbar = GradedCoeff::hbar();
    int checks = 0, agree = 0;
    for (std::uint32_t n = 0; n <= 5; ++n) {
      for (std::uint32_t m = 0; m <= 5; ++m) {
        const auto qn = pow(OperatorPoly::Q(), n);
        const auto pm = pow(OperatorPoly::P(), m);
        const auto raw_f = smooth(weyl_mixed_factor(mono(n, m), hbar), hbar);
        const auto com_f = smooth(sinc_commutator(mono(n, m), hbar), hbar);
        for (int k = 0; k < 5; ++k) {
          const auto c = random_center(rng);
          checks += 2;
          agree += coherent_expectation_exact(qn * pm, c) == evaluate(raw_f, c);
          agree += coherent_expectation_exact(commutator(qn, pm), c) == GradedCoeff::i_hbar() * evaluate(com_f, c);
        }
      }
    }
    return Outcome{agree == checks, fmt("%d/%d exact", agree, checks)};
  });

  criterion(6, "Monte Carlo average of q^3*p under harmonic flow", 120, [] {
    const GaussianEnsemble ens{make_phase_point({1.0, 0.5}), 0.2};
    const auto q = NumericPhasePoly::variable({0, Coord::q});
    const auto p = NumericPhasePoly::variable({0, Coord::p});
    const auto f = q * q * q * p;
    const auto flow = FlowMap::harmonic({1.0});
    const auto main_run = verify_smoothing_identity(f, ens, flow, 0.7, 1000000, 1);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      covered += verify_smoothing_identity(f, ens, flow, 0.7, 1000000, seed).pass;
    }
    return Outcome{main_run.pass && covered >= 99,
                   fmt("mean %.6f ref %.6f stderr %.2e; coverage %d/100", main_run.mean, main_run.reference,
                       main_run.std_error, covered)};
  });

  criterion(7, "truncated smoothing of the k=2 oscillator flow, sigma=0.02", 120, [] {
    const auto m = model(1, 2, 0.1, 0.02, {1.0}, {1.0, 1.0});
    const GaussianEnsemble ens{m.center, 0.02};
    std::string detail;
    bool ok = true;
    for (std::size_t coord : {0u, 1u}) {
      const auto r = verify_smoothing_truncated(m, coord, ens, 1.0, 1000000, 1);
      ok = ok && r.pass && r.mean_within_band && r.shrink_ratio.has_value() && r.shrinkage_ok;
      detail += fmt("%s: |mean-ref| %.2e (3se %.2e), shrink %.3f; ", coord ? "p" : "q", std::abs(r.mean - r.reference),
                    3 * r.std_error, r.shrink_ratio.value_or(NAN));
    }
    return Outcome{ok, detail};
  });

  criterion(8, "Ehrenfest time for the figure-1 model", 60, [] {
    const double a1 = ehrenfest_analytic(figure1_model(1.0)).t_analytic;
    const double a2 = ehrenfest_analytic(figure1_model(0.1)).t_analytic;
    const double a3 = ehrenfest_analytic(figure1_model(0.01)).t_analytic;
    bool ok = std::abs(a1 - 3.75) < 1e-12 && std::abs(a2 - 15.416) < 5e-4 && std::abs(a3 - 49.875) < 1e-12;
    std::vector<double> dev;
    for (double h : {0.1, 0.01, 0.001}) {
      const auto m = figure1_model(h);
      dev.push_back(std::abs(ehrenfest_numeric(m) / ehrenfest_analytic(m).t_analytic - 1.0));
    }
    ok = ok && dev[1] <= 0.05 && dev[0] > dev[1] && dev[1] > dev[2];
    return Outcome{ok, fmt("analytic %.4f/%.4f/%.4f; rel. dev %.4f/%.4f/%.4f", a1, a2, a3, dev[0], dev[1], dev[2])};
  });

  criterion(9, "scaling laws: t_E exponent and short-time departure slope", 60, [] {
    std::vector<double> hbars, times;
    for (double h : {1e-1, 1e-2, 1e-3, 1e-4}) {
      hbars.push_back(h);
      times.push_back(ehrenfest_numeric(figure1_model(h)));
    }
    const double exponent = loglog_slope(hbars, times);
    const auto m = figure1_model(0.01);
    const double omega = omega_typical(m);
    std::vector<double> ts, ds;
    for (int i = 0; i <= 20; ++i) {
      const double t = omega * 1e-3 * std::pow(10.0, i / 20.0);
      ts.push_back(t);
      ds.push_back(departure(m, t));
    }
    const double slope = loglog_slope(ts, ds);
    const bool ok_a = std::abs(exponent + 0.5) <= 0.02;
    const bool ok_b = std::abs(slope - 2.0) <= 0.05;
    return Outcome{ok_a && ok_b, fmt("(a) exponent %.4f [%s]; (b) slope on t in [1e-3,1e-2]*Omega %.4f [%s]", exponent,
                                     ok_a ? "ok" : "out of range", slope, ok_b ? "ok" : "out of range")};
  });

  criterion(10, "degenerate limits and action conservation", 30, [] {
    bool limits = true;
    for (const auto& m : {model(2, 2, 0.0, 0.1, {1.0, 0.7}, {1, 1, 1, 1}), model(2, 1, 0.1, 0.1, {1.0, 0.7}, {1, 1, 1, 1})}) {
      for (int i = 0; i <= 100; ++i) limits = limits && departure(m, 0.5 * i) == 0.0;
      limits = limits && std::isinf(ehrenfest_numeric(m)) && std::isinf(ehrenfest_analytic(m).t_analytic);
    }
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> tt(0.0, 100.0);
    const auto m = figure1_model(0.01);
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const auto x = make_phase_point({u(rng), u(rng), u(rng), u(rng)});
      const double l0 = total_action(x.coords);
      const double l1 = total_action(classical_flow(m, x, tt(rng)).coords);
      worst = std::max(worst, std::abs(l1 - l0) / l0);
    }
    return Outcome{limits && worst <= 1e-12,
                   fmt("g=0 and k=1 give zero departure and infinite t_E: %s; worst relative Lambda drift %.2e over 1e5 "
                       "points",
                       limits ? "yes" : "no", worst)};
  });

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
