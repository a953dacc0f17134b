#include "ordquant/liouville.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "json.hpp"

#include "ordquant/errors.hpp"
#include "ordquant/smoothing.hpp"

namespace ordquant {

namespace {

struct Welford {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
  }

  void merge(const Welford& o) {
    if (o.n == 0.0) return;
    if (n == 0.0) {
      *this = o;
      return;
    }
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * (o.n / total);
    m2 += o.m2 + delta * delta * (n * o.n / total);
    n = total;
  }

  double std_error() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

// Runs body(chunk, begin, end) over fixed-size chunks on a small worker pool
// and merges the per-chunk accumulators in chunk order.
template <std::size_t K, class Body>
std::array<Welford, K> run_chunked(std::size_t samples, unsigned threads, Body&& body) {
  const std::size_t chunks = (samples + kMcChunk - 1) / kMcChunk;
  std::vector<std::array<Welford, K>> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      const std::size_t begin = c * kMcChunk;
      const std::size_t end = std::min(samples, begin + kMcChunk);
      try {
        partial[c] = body(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::array<Welford, K> total{};
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k].merge(p[k]);
  }
  return total;
}

unsigned resolve_threads(const McOptions& options) {
  return options.threads ? options.threads : default_worker_count();
}

void require_samples(std::size_t samples) {
  if (samples < 100) throw ModelError("Monte Carlo needs at least 100 samples, got " + std::to_string(samples));
}

// Flat real polynomial for the Monte Carlo inner loop.
class CompiledPoly {
 public:
  explicit CompiledPoly(const NumericPhasePoly& f) {
    for (const auto& [m, c] : f.terms()) terms_.push_back({c.real(), m.exponents()});
  }
  double operator()(std::span<const double> x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
      double v = t.coeff;
      for (std::size_t j = 0; j < t.exps.size(); ++j) {
        for (std::uint32_t e = 0; e < t.exps[j]; ++e) v *= x[j];
      }
      sum += v;
    }
    return sum;
  }

 private:
  struct Term {
    double coeff;
    std::vector<std::uint32_t> exps;
  };
  std::vector<Term> terms_;
};

}  // namespace

void GaussianEnsemble::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ModelError("ensemble sigma must be a finite value > 0");
  if (center.coords.empty() || center.coords.size() % 2) throw ModelError("ensemble center must hold (q, p) pairs");
  for (double x : center.coords) {
    if (!std::isfinite(x)) throw ModelError("ensemble center entries must be finite");
  }
}

FlowMap FlowMap::identity(std::size_t modes) {
  const std::size_t dim = 2 * modes;
  return FlowMap(
      "identity", dim, [](std::span<const double> x, double, std::span<double> out) { std::copy(x.begin(), x.end(), out.begin()); },
      [dim](double) {
        std::vector<double> m(dim * dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
        return m;
      });
}

FlowMap FlowMap::harmonic(std::vector<double> omega) {
  const std::size_t dim = 2 * omega.size();
  auto apply = [omega](std::span<const double> x, double t, std::span<double> out) {
    for (std::size_t i = 0; i < omega.size(); ++i) {
      const double c = std::cos(omega[i] * t);
      const double s = std::sin(omega[i] * t);
      out[2 * i] = c * x[2 * i] + s * x[2 * i + 1];
      out[2 * i + 1] = c * x[2 * i + 1] - s * x[2 * i];
    }
  };
  auto matrix = [omega, dim](double t) {
    std::vector<double> m(dim * dim, 0.0);
    for (std::size_t i = 0; i < omega.size(); ++i) {
      const double c = std::cos(omega[i] * t);
      const double s = std::sin(omega[i] * t);
      const std::size_t q = 2 * i;
      const std::size_t p = 2 * i + 1;
      m[q * dim + q] = c;
      m[q * dim + p] = s;
      m[p * dim + q] = -s;
      m[p * dim + p] = c;
    }
    return m;
  };
  return FlowMap("harmonic", dim, std::move(apply), std::move(matrix));
}

FlowMap FlowMap::oscillator(const OscillatorModel& model) {
  model.validate();
  return FlowMap("oscillator", 2 * static_cast<std::size_t>(model.n_modes),
                 [model](std::span<const double> x, double t, std::span<double> out) {
                   classical_flow_generic<double>(model, x, t, out);
                 });
}

std::vector<double> FlowMap::matrix(double t) const {
  if (!matrix_) throw ModelError("flow '" + name_ + "' is not linear");
  return matrix_(t);
}

unsigned default_worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORDQUANT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  engine_.seed(seq);
}

double NormalStream::uniform() {
  // (0, 1], 53 random bits.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

void NormalStream::fill(std::span<double> out) {
  for (auto& v : out) v = next();
}

McEstimate mc_average(const Observable& observable, const GaussianEnsemble& ensemble, const FlowMap& flow, double t,
                      std::size_t samples, std::uint64_t seed, const McOptions& options) {
  ensemble.validate();
  require_samples(samples);
  const std::size_t dim = ensemble.center.coords.size();
  if (flow.dimension() != dim) throw ModelError("flow dimension does not match the ensemble center");
  const double width = std::sqrt(ensemble.sigma / 2.0);

  auto stats = run_chunked<1>(samples, resolve_threads(options), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    NormalStream normals(seed, chunk);
    std::vector<double> x(dim), y(dim);
    std::array<Welford, 1> acc{};
    for (std::size_t s = begin; s < end; ++s) {
      for (std::size_t j = 0; j < dim; ++j) x[j] = ensemble.center.coords[j] + width * normals.next();
      flow.apply(x, t, y);
      const double v = observable(y);
      if (!std::isfinite(v)) {
        throw PropagationError("observable is not finite at sample " + std::to_string(s), s);
      }
      acc[0].add(v);
    }
    return acc;
  });
  return McEstimate{stats[0].mean, stats[0].std_error(), samples, seed};
}

std::string SmoothingReport::to_json() const {
  nlohmann::ordered_json j;
  j["mean"] = mean;
  j["stderr"] = std_error;
  j["reference"] = reference;
  j["pass"] = pass;
  j["seed"] = seed;
  j["samples"] = samples;
  return j.dump();
}

SmoothingReport verify_smoothing_identity(const NumericPhasePoly& f, const GaussianEnsemble& ensemble,
                                          const FlowMap& flow, double t, std::size_t samples, std::uint64_t seed,
                                          const McOptions& options) {
  ensemble.validate();
  const std::size_t dim = ensemble.center.coords.size();
  const NumericPhasePoly pushed = compose_linear(f, flow.matrix(t), dim);
  const double reference = evaluate(smooth(pushed, std::complex<double>(ensemble.sigma)), ensemble.center.coords).real();

  const CompiledPoly compiled(f);
  const McEstimate est = mc_average([&](std::span<const double> y) { return compiled(y); }, ensemble, flow, t,
                                    samples, seed, options);
  SmoothingReport report;
  report.mean = est.mean;
  report.std_error = est.std_error;
  report.reference = reference;
  report.seed = seed;
  report.samples = samples;
  report.pass = std::abs(est.mean - reference) <= 3.0 * est.std_error;
  return report;
}

std::string TruncatedReport::to_json() const {
  nlohmann::ordered_json j;
  j["mean"] = mean;
  j["stderr"] = std_error;
  j["reference"] = reference;
  j["pass"] = pass;
  j["seed"] = seed;
  j["samples"] = samples;
  j["coordinate"] = coordinate;
  j["sigma"] = sigma;
  j["residual"] = residual;
  j["residual_stderr"] = residual_stderr;
  j["residual_half"] = residual_half;
  j["residual_half_stderr"] = residual_half_stderr;
  j["shrink_ratio"] = shrink_ratio ? nlohmann::ordered_json(*shrink_ratio) : nlohmann::ordered_json(nullptr);
  j["quadratic_constant"] = quadratic_constant;
  j["mean_within_band"] = mean_within_band;
  j["shrinkage_ok"] = shrinkage_ok;
  return j.dump();
}

TruncatedReport verify_smoothing_truncated(const OscillatorModel& model, std::size_t coordinate,
                                           const GaussianEnsemble& ensemble, double t, std::size_t samples,
                                           std::uint64_t seed, const McOptions& options) {
  model.validate();
  ensemble.validate();
  require_samples(samples);
  const std::size_t dim = 2 * static_cast<std::size_t>(model.n_modes);
  if (ensemble.center.coords.size() != dim) throw ModelError("ensemble center does not match the model");
  if (coordinate >= dim) throw ModelError("coordinate index " + std::to_string(coordinate) + " out of range");

  OscillatorModel centered = model;
  centered.center = ensemble.center;
  const double sigma = ensemble.sigma;
  const auto& x0 = ensemble.center.coords;

  std::vector<double> r(dim);
  classical_flow_generic<double>(centered, x0, t, r);
  const auto lap_closed = trajectory_laplacian(centered, t);
  const auto lap_ad = trajectory_laplacian_autodiff(centered, x0, t);

  TruncatedReport report;
  report.coordinate = coordinate;
  report.sigma = sigma;
  report.seed = seed;
  report.samples = samples;
  report.reference = r[coordinate] + 0.25 * sigma * lap_closed[coordinate];

  const FlowMap flow = FlowMap::oscillator(centered);
  const McEstimate plain = mc_average([coordinate](std::span<const double> y) { return y[coordinate]; }, ensemble, flow,
                                      t, samples, seed, options);
  report.mean = plain.mean;
  report.std_error = plain.std_error;

  // Residual estimator: antithetic pair minus the second-order Taylor term
  // along the same draw,
  //   rho(z) = (f(x0 + e z) + f(x0 - e z)) / 2 - f(x0) - (e^2 / 2) z'Hz,
  // whose mean is E[f] - f(x0) - (s/4) lap f for e^2 = s/2, whatever H is.
  // The directional second derivative z'Hz comes from a hyper-dual pass.
  using HD = HyperDual<double>;
  const double f0 = r[coordinate];
  const std::array<double, 2> widths{sigma, sigma / 2.0};
  auto stats = run_chunked<2>(samples, resolve_threads(options), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    NormalStream normals(seed ^ 0x9e3779b97f4a7c15ULL, chunk);
    std::vector<double> z(dim), xp(dim), xm(dim), yp(dim), ym(dim);
    std::vector<HD> xh(dim), yh(dim);
    std::array<Welford, 2> acc{};
    for (std::size_t s = begin; s < end; ++s) {
      normals.fill(z);
      for (std::size_t j = 0; j < dim; ++j) xh[j] = HD(x0[j], z[j], z[j], 0.0);
      classical_flow_generic<HD>(centered, xh, t, yh);
      const double curvature = yh[coordinate].d12;
      for (std::size_t w = 0; w < widths.size(); ++w) {
        const double eps = std::sqrt(widths[w] / 2.0);
        for (std::size_t j = 0; j < dim; ++j) {
          xp[j] = x0[j] + eps * z[j];
          xm[j] = x0[j] - eps * z[j];
        }
        classical_flow_generic<double>(centered, xp, t, yp);
        classical_flow_generic<double>(centered, xm, t, ym);
        const double rho = 0.5 * (yp[coordinate] + ym[coordinate]) - f0 - 0.5 * eps * eps * curvature;
        if (!std::isfinite(rho)) throw PropagationError("residual is not finite at sample " + std::to_string(s), s);
        acc[w].add(rho);
      }
    }
    return acc;
  });

  // Shift from the AD Laplacian (used inside rho) to the closed form under test.
  const double lap_shift = lap_ad[coordinate] - lap_closed[coordinate];
  report.residual = stats[0].mean + 0.25 * sigma * lap_shift;
  report.residual_stderr = stats[0].std_error();
  report.residual_half = stats[1].mean + 0.125 * sigma * lap_shift;
  report.residual_half_stderr = stats[1].std_error();
  report.quadratic_constant = std::abs(report.residual) / (sigma * sigma);

  report.mean_within_band =
      std::abs(report.mean - report.reference) <= 3.0 * report.std_error + report.quadratic_constant * sigma * sigma;

  const bool resolved = std::abs(report.residual) > 3.0 * report.residual_stderr &&
                        std::abs(report.residual_half) > 3.0 * report.residual_half_stderr;
  if (resolved) {
    report.shrink_ratio = report.residual / report.residual_half;
    report.shrinkage_ok = std::abs(*report.shrink_ratio - 4.0) <= kShrinkRatioTolerance;
  } else {
    report.shrinkage_ok = true;
  }
  report.pass = report.mean_within_band && report.shrinkage_ok;
  return report;
}

}  // namespace ordquant
