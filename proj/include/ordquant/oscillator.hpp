#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordquant/hyperdual.hpp"
#include "ordquant/phase_poly.hpp"

namespace ordquant {

/// N oscillators coupled through a power of the total action:
///   H = sum_i omega_i L_i + g (sum_i L_i)^k,  L_i = (q_i^2 + p_i^2) / 2.
/// The total action Lambda is conserved, and mode i rotates in phase space by
///   Theta_i(t) = omega_i t + g t k Lambda^(k-1).
struct OscillatorModel {
  int n_modes = 1;
  int k = 2;
  double g = 0.0;
  double hbar = 1.0;
  std::vector<double> omega;
  PhasePoint center;

  /// Throws ModelError on inconsistent sizes, k < 1, g < 0, hbar <= 0 or
  /// non-finite entries.
  void validate() const;
  /// Lambda at the model center.
  double action() const;
  bool is_harmonic() const { return g == 0.0 || k == 1; }
};

/// Lambda(x) = sum_i (q_i^2 + p_i^2) / 2.
double total_action(std::span<const double> x);

/// The N = 2, k = 2, omega = 1, g = 0.1, q_i = p_i = 1 model (Lambda = 2).
OscillatorModel figure1_model(double hbar);

/// Exact flow, rotation angle taken from Lambda of the argument point.
PhasePoint classical_flow(const OscillatorModel& model, const PhasePoint& x, double t);

/// Generic flow used both numerically and under automatic differentiation.
template <class S>
void classical_flow_generic(const OscillatorModel& model, std::span<const S> x, double t, std::span<S> out) {
  using std::cos;
  using std::sin;
  S lambda(0.0);
  for (const auto& xi : x) lambda = lambda + 0.5 * (xi * xi);
  const S shift = (model.g * t * model.k) * ipow(lambda, model.k - 1);
  for (int i = 0; i < model.n_modes; ++i) {
    const S theta = S(model.omega[i] * t) + shift;
    const S c = cos(theta);
    const S s = sin(theta);
    const S& q = x[2 * i];
    const S& p = x[2 * i + 1];
    out[2 * i] = c * q + s * p;
    out[2 * i + 1] = c * p - s * q;
  }
}

/// Laplacian (over all 2N initial coordinates) of each flow component at x,
/// closed form.
std::vector<double> trajectory_laplacian_at(const OscillatorModel& model, std::span<const double> x, double t);
/// Same quantity by hyper-dual automatic differentiation of the flow.
std::vector<double> trajectory_laplacian_autodiff(const OscillatorModel& model, std::span<const double> x, double t);
/// Closed form evaluated at the model center.
std::vector<double> trajectory_laplacian(const OscillatorModel& model, double t);

/// r(t) + (sigma/4) laplacian r(t) at the model center.
PhasePoint smoothed_centroid_first_order(const OscillatorModel& model, double t, double sigma);
/// The same with sigma = hbar.
PhasePoint smoothed_centroid_first_order(const OscillatorModel& model, double t);

/// delta(t) = (hbar/4) ||laplacian r(t)|| / ||r(0)||. Throws
/// DegenerateCenterError when the center is the origin.
double departure(const OscillatorModel& model, double t);

/// 1 / (k (k-1) g Lambda^(k-1)); infinite for harmonic models.
double omega_typical(const OscillatorModel& model);

struct EhrenfestResult {
  std::optional<double> t_numeric;
  double t_analytic = INFINITY;
  double omega_typical = INFINITY;
  double action_typical = 0.0;
  double classicality = 0.0;
};

/// First t > 0 with delta(t) = 1: forward scan with step omega_typical / 100
/// up to 1e4 * omega_typical, then bisection to relative tolerance 1e-10.
/// Infinite for harmonic models; HorizonError when no crossing is found.
double ehrenfest_numeric(const OscillatorModel& model);

/// First-order formula
///   t_E = Omega (2 Lambda / hbar)^(1/2) (1 - hbar k^2 / (8 Lambda)),
/// with diagnostics Omega, S = 2 Lambda and hbar k^2 / (8 Lambda).
EhrenfestResult ehrenfest_analytic(const OscillatorModel& model);

struct DepartureCurve {
  std::vector<std::pair<double, double>> samples;
  OscillatorModel model;
  /// First grid index with delta >= 1, if any.
  std::optional<std::size_t> crossing_index;
};

/// Samples delta on a strictly increasing grid starting at t >= 0.
DepartureCurve departure_curve(const OscillatorModel& model, std::span<const double> t_grid);

}  // namespace ordquant
