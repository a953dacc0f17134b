#include "ordquant/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ordquant/errors.hpp"

namespace ordquant {

void OscillatorModel::validate() const {
  if (n_modes < 1) throw ModelError("N must be >= 1");
  if (k < 1) throw ModelError("k must be >= 1");
  if (!(g >= 0.0) || !std::isfinite(g)) throw ModelError("g must be a finite value >= 0");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ModelError("hbar must be a finite value > 0");
  if (omega.size() != static_cast<std::size_t>(n_modes)) throw ModelError("omega must have N entries");
  if (center.coords.size() != 2 * static_cast<std::size_t>(n_modes)) throw ModelError("center must have 2N entries");
  for (double w : omega) {
    if (!std::isfinite(w)) throw ModelError("omega entries must be finite");
  }
  for (double x : center.coords) {
    if (!std::isfinite(x)) throw ModelError("center entries must be finite");
  }
}

double OscillatorModel::action() const { return total_action(center.coords); }

double total_action(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return 0.5 * sum;
}

OscillatorModel figure1_model(double hbar) {
  OscillatorModel m;
  m.n_modes = 2;
  m.k = 2;
  m.g = 0.1;
  m.hbar = hbar;
  m.omega = {1.0, 1.0};
  m.center = PhasePoint{{1.0, 1.0, 1.0, 1.0}};
  return m;
}

PhasePoint classical_flow(const OscillatorModel& model, const PhasePoint& x, double t) {
  if (x.coords.size() != 2 * static_cast<std::size_t>(model.n_modes)) {
    throw ModelError("flow point must have 2N entries");
  }
  PhasePoint out{std::vector<double>(x.coords.size())};
  classical_flow_generic<double>(model, x.coords, t, out.coords);
  return out;
}

std::vector<double> trajectory_laplacian_at(const OscillatorModel& model, std::span<const double> x, double t) {
  // See docs/trajectory_laplacian.md. With phi(Lambda) = g t k Lambda^(k-1):
  //   lap q_i(t) =  A p_i(t) - B q_i(t)
  //   lap p_i(t) = -A q_i(t) - B p_i(t)
  //   A = 2 (N + 1) phi' + 2 Lambda phi'',  B = 2 Lambda phi'^2
  const int k = model.k;
  const double lambda = total_action(x);
  const double d1 = k >= 2 ? model.g * t * k * (k - 1) * std::pow(lambda, k - 2) : 0.0;
  const double d2 = k >= 3 ? model.g * t * k * (k - 1) * (k - 2) * std::pow(lambda, k - 3) : 0.0;
  const double a = 2.0 * (model.n_modes + 1) * d1 + 2.0 * lambda * d2;
  const double b = 2.0 * lambda * d1 * d1;

  std::vector<double> r(x.size());
  classical_flow_generic<double>(model, x, t, r);
  std::vector<double> out(x.size());
  for (int i = 0; i < model.n_modes; ++i) {
    const double q = r[2 * i];
    const double p = r[2 * i + 1];
    out[2 * i] = a * p - b * q;
    out[2 * i + 1] = -a * q - b * p;
  }
  return out;
}

std::vector<double> trajectory_laplacian_autodiff(const OscillatorModel& model, std::span<const double> x, double t) {
  using HD = HyperDual<double>;
  std::vector<HD> seeded(x.begin(), x.end());
  std::vector<HD> image(x.size());
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t c = 0; c < x.size(); ++c) {
    seeded[c] = HD::variable(x[c]);
    classical_flow_generic<HD>(model, seeded, t, image);
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += image[j].d12;
    seeded[c] = HD(x[c]);
  }
  return out;
}

std::vector<double> trajectory_laplacian(const OscillatorModel& model, double t) {
  return trajectory_laplacian_at(model, model.center.coords, t);
}

PhasePoint smoothed_centroid_first_order(const OscillatorModel& model, double t, double sigma) {
  PhasePoint r = classical_flow(model, model.center, t);
  const auto lap = trajectory_laplacian(model, t);
  for (std::size_t j = 0; j < lap.size(); ++j) r.coords[j] += 0.25 * sigma * lap[j];
  return r;
}

PhasePoint smoothed_centroid_first_order(const OscillatorModel& model, double t) {
  return smoothed_centroid_first_order(model, t, model.hbar);
}

double departure(const OscillatorModel& model, double t) {
  const double r0 = std::sqrt(2.0 * model.action());
  if (r0 == 0.0) throw DegenerateCenterError("departure undefined: initial phase-space vector is zero");
  const auto lap = trajectory_laplacian(model, t);
  double norm2 = 0.0;
  for (double v : lap) norm2 += v * v;
  return 0.25 * model.hbar * std::sqrt(norm2) / r0;
}

double omega_typical(const OscillatorModel& model) {
  if (model.is_harmonic()) return std::numeric_limits<double>::infinity();
  const double lambda = model.action();
  return 1.0 / (model.k * (model.k - 1) * model.g * std::pow(lambda, model.k - 1));
}

double ehrenfest_numeric(const OscillatorModel& model) {
  model.validate();
  if (model.is_harmonic()) return std::numeric_limits<double>::infinity();
  if (model.action() == 0.0) throw DegenerateCenterError("Ehrenfest time undefined: initial phase-space vector is zero");

  const double omega = omega_typical(model);
  const double step = omega / 100.0;
  const double horizon = 1e4 * omega;
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (long j = 1; j * step <= horizon; ++j) {
    hi = j * step;
    if (departure(model, hi) >= 1.0) {
      bracketed = true;
      break;
    }
    lo = hi;
  }
  if (!bracketed) {
    throw HorizonError("no departure crossing within t <= " + std::to_string(horizon), horizon);
  }
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (departure(model, mid) >= 1.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

EhrenfestResult ehrenfest_analytic(const OscillatorModel& model) {
  model.validate();
  EhrenfestResult out;
  const double lambda = model.action();
  out.action_typical = 2.0 * lambda;
  if (model.is_harmonic()) {
    out.classicality = lambda > 0 ? model.hbar * model.k * model.k / (8.0 * lambda) : INFINITY;
    return out;
  }
  if (lambda <= 0.0) throw DegenerateCenterError("Ehrenfest time undefined: Lambda must be positive");
  out.omega_typical = omega_typical(model);
  out.classicality = model.hbar * model.k * model.k / (8.0 * lambda);
  if (out.classicality >= 1.0) {
    throw ModelError("first-order break-time formula is not positive: hbar k^2 / (8 Lambda) = " +
                     std::to_string(out.classicality) + " >= 1");
  }
  out.t_analytic = out.omega_typical * std::sqrt(2.0 * lambda / model.hbar) * (1.0 - out.classicality);
  return out;
}

DepartureCurve departure_curve(const OscillatorModel& model, std::span<const double> t_grid) {
  model.validate();
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i])) throw ModelError("time grid entries must be finite");
    if (i == 0 && t_grid[i] < 0.0) throw ModelError("time grid must start at t >= 0");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw ModelError("time grid must be strictly increasing");
  }
  DepartureCurve curve;
  curve.model = model;
  curve.samples.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double d = departure(model, t_grid[i]);
    curve.samples.emplace_back(t_grid[i], d);
    if (!curve.crossing_index && d >= 1.0) curve.crossing_index = i;
  }
  return curve;
}

}  // namespace ordquant
