#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ordquant/oscillator.hpp"
#include "ordquant/phase_poly.hpp"

namespace ordquant {

/// Independent Gaussians around center, density ~ exp(-(x - x0)^2 / sigma)
/// per coordinate (variance sigma / 2).
struct GaussianEnsemble {
  PhasePoint center;
  double sigma = 0.0;

  void validate() const;
};

/// Deterministic phase-space flow x -> flow(x, t).
class FlowMap {
 public:
  using Apply = std::function<void(std::span<const double>, double, std::span<double>)>;
  using LinearMatrix = std::function<std::vector<double>(double)>;

  FlowMap(std::string name, std::size_t dim, Apply apply, LinearMatrix matrix = {})
      : name_(std::move(name)), dim_(dim), apply_(std::move(apply)), matrix_(std::move(matrix)) {}

  static FlowMap identity(std::size_t modes);
  /// Mode j rotates by omega_j t (same sense as the oscillator flow).
  static FlowMap harmonic(std::vector<double> omega);
  static FlowMap oscillator(const OscillatorModel& model);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dim_; }
  bool is_linear() const { return static_cast<bool>(matrix_); }
  void apply(std::span<const double> x, double t, std::span<double> out) const { apply_(x, t, out); }
  /// Row-major 2N x 2N matrix of a linear flow at time t.
  std::vector<double> matrix(double t) const;

 private:
  std::string name_;
  std::size_t dim_;
  Apply apply_;
  LinearMatrix matrix_;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

using Observable = std::function<double(std::span<const double>)>;

struct McOptions {
  /// Worker cap; 0 means hardware concurrency limited by ORDQUANT_THREADS.
  unsigned threads = 0;
};

/// Samples handled by one RNG stream. Results never depend on the worker
/// count, only on (seed, samples).
inline constexpr std::size_t kMcChunk = 4096;

/// Number of workers used when McOptions::threads == 0.
unsigned default_worker_count();

/// Standard normals for one chunk of samples (Box-Muller over a 64-bit
/// Mersenne Twister seeded from (seed, chunk)). Chunk c always covers samples
/// [c * kMcChunk, (c + 1) * kMcChunk), whichever worker draws it.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t chunk);
  void fill(std::span<double> out);
  double next();

 private:
  double uniform();
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Plain Monte Carlo estimate of the ensemble average of observable(flow(x, t)).
/// Throws PropagationError naming the first sample that yields a non-finite
/// value.
McEstimate mc_average(const Observable& observable, const GaussianEnsemble& ensemble, const FlowMap& flow, double t,
                      std::size_t samples, std::uint64_t seed, const McOptions& options = {});

struct SmoothingReport {
  double mean = 0.0;
  double std_error = 0.0;
  double reference = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;

  std::string to_json() const;
};

/// Compares the Monte Carlo average of f(flow(x, t)) with the smoothed
/// pushforward smooth(f o flow_t, sigma) at the center. Pass iff the
/// difference is within 3 standard errors. The flow must be linear.
SmoothingReport verify_smoothing_identity(const NumericPhasePoly& f, const GaussianEnsemble& ensemble,
                                          const FlowMap& flow, double t, std::size_t samples, std::uint64_t seed,
                                          const McOptions& options = {});

struct TruncatedReport {
  double mean = 0.0;
  double std_error = 0.0;
  /// r(t) + (sigma/4) lap r(t) for the chosen coordinate.
  double reference = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t coordinate = 0;
  double sigma = 0.0;

  // Convergence study: residual E[r_j] - r_j - (s/4) lap r_j at s = sigma and
  // s = sigma / 2, from a variance-reduced estimator with common draws.
  double residual = 0.0;
  double residual_stderr = 0.0;
  double residual_half = 0.0;
  double residual_half_stderr = 0.0;
  /// residual / residual_half; about 4 when truncation error is quadratic.
  std::optional<double> shrink_ratio;
  /// C in |mean - reference| <= 3 stderr + C sigma^2.
  double quadratic_constant = 0.0;
  bool mean_within_band = false;
  bool shrinkage_ok = false;

  std::string to_json() const;
};

/// Allowed deviation of shrink_ratio from 4.
inline constexpr double kShrinkRatioTolerance = 0.5;

/// Checks the first-order smoothed centroid of the oscillator flow against a
/// Monte Carlo trajectory average. Pass iff the plain estimate lies within
/// 3 stderr + C sigma^2 of r + (sigma/4) lap r and, when the residual is
/// resolved above its noise, it shrinks by 4 +- kShrinkRatioTolerance under
/// sigma -> sigma/2.
TruncatedReport verify_smoothing_truncated(const OscillatorModel& model, std::size_t coordinate,
                                           const GaussianEnsemble& ensemble, double t, std::size_t samples,
                                           std::uint64_t seed, const McOptions& options = {});

}  // namespace ordquant
