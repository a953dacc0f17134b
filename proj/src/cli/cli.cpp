#include "ordquant/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "ordquant/coherent.hpp"
#include "ordquant/expr.hpp"
#include "ordquant/liouville.hpp"
#include "ordquant/ordering.hpp"
#include "ordquant/selfcheck.hpp"
#include "ordquant/smoothing.hpp"

namespace ordquant {

using nlohmann::json;

namespace {

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string sig(double x, int digits) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

json real_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::vector<double> require_list(std::string_view text, const std::string& what) {
  try {
    return parse_real_list(text);
  } catch (const ModelError& e) {
    throw ModelError(what + ": " + e.what());
  }
}

std::vector<Rational> exact_point(const std::vector<double>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (double x : v) out.push_back(exact_rational(x));
  return out;
}

std::uint32_t operator_modes(const OperatorPoly& x) {
  std::uint32_t n = 0;
  for (const auto& [mode, fam] : x.families()) n = std::max(n, mode + 1);
  return n;
}

void check_center(const std::vector<double>& center, std::uint32_t modes) {
  if (center.size() % 2 != 0) throw ModelError("center must list q,p pairs (even length), got " + std::to_string(center.size()));
  if (center.size() / 2 < modes) {
    throw ModelError("expression uses " + std::to_string(modes) + " mode(s) but the center has " +
                     std::to_string(center.size() / 2));
  }
}

/// Parses a constant expression such as 0.2, 1/3 or hbar.
GradedCoeff parse_constant(const std::string& text, const std::string& what) {
  const PhasePoly c = parse_phase_expr(text);
  if (c.is_zero()) return GradedCoeff();
  if (c.size() != 1 || !c.terms().begin()->first.is_constant()) throw ModelError(what + " must be a constant");
  return c.terms().begin()->second;
}

json model_json(const OscillatorModel& m) {
  json q0 = json::array(), p0 = json::array();
  for (int i = 0; i < m.n_modes; ++i) {
    q0.push_back(m.center.q(i));
    p0.push_back(m.center.p(i));
  }
  return {{"N", m.n_modes}, {"k", m.k}, {"g", m.g}, {"hbar", m.hbar}, {"omega", m.omega}, {"q0", q0}, {"p0", p0}};
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  json report = json::object();
};

int cmd_order(Context& ctx, const std::string& expr, const std::string& target_name) {
  static const std::map<std::string, OrderTarget> targets = {{"qp", OrderTarget::qp},
                                                             {"pq", OrderTarget::pq},
                                                             {"normal", OrderTarget::normal},
                                                             {"antinormal", OrderTarget::antinormal}};
  const OrderTarget target = targets.at(target_name);
  OperatorPoly x;
  if (classify_expr(expr) == ExprDomain::phase) {
    x = quantize_symmetric(parse_phase_expr(expr));
  } else {
    x = parse_operator_expr(expr);
  }
  const std::string text = render(canonicalize(x, target));
  ctx.out << text << "\n";
  ctx.report["outputs"] = {{"result", text}};
  return kExitOk;
}

int cmd_expect(Context& ctx, const std::string& expr, const std::string& center_text, double hbar,
               const std::string& mode) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ModelError("hbar must be a finite value > 0");
  const auto center = require_list(center_text, "--center");
  std::complex<double> value;
  if (mode == "symmetric") {
    const PhasePoly f = parse_phase_expr(expr);
    check_center(center, f.mode_count());
    value = evaluate_numeric(smooth(f, GradedCoeff::hbar()), center, hbar);
  } else {
    const OperatorPoly x = parse_operator_expr(expr);
    check_center(center, operator_modes(x));
    value = coherent_expectation_exact(x, exact_point(center)).evaluate(hbar);
  }
  const std::string text = format_complex(value.real(), value.imag());
  ctx.out << text << "\n";
  ctx.report["outputs"] = {{"re", value.real()}, {"im", value.imag()}};
  return kExitOk;
}

int cmd_smooth(Context& ctx, const std::string& expr, const std::string& sigma_text, bool inverse) {
  const GradedCoeff sigma = parse_constant(sigma_text, "--sigma");
  if (sigma.is_scalar() && (sgn(sigma.at_grade(0).im) != 0 || sgn(sigma.at_grade(0).re) < 0)) {
    throw ModelError("--sigma must be a real value >= 0");
  }
  const PhasePoly f = parse_phase_expr(expr);
  const std::string text = render(inverse ? inverse_smooth(f, sigma) : smooth(f, sigma));
  ctx.out << text << "\n";
  ctx.report["outputs"] = {{"result", text}};
  return kExitOk;
}

int cmd_ehrenfest(Context& ctx, const std::string& model_path, const std::string& method) {
  const OscillatorModel model = load_model_config(model_path);
  const double lambda = model.action();
  json result = {{"t_analytic", nullptr},
                 {"t_numeric", nullptr},
                 {"omega_typical", real_or_inf(omega_typical(model))},
                 {"action_typical", 2.0 * lambda},
                 {"classicality", real_or_inf(lambda > 0 ? model.hbar * model.k * model.k / (8.0 * lambda) : INFINITY)}};
  if (method != "numeric") {
    try {
      result["t_analytic"] = real_or_inf(ehrenfest_analytic(model).t_analytic);
    } catch (const DegenerateCenterError&) {
      throw;
    } catch (const ModelError& e) {
      ctx.err << "warning: " << e.what() << "\n";
    }
  }
  if (method != "analytic") {
    try {
      result["t_numeric"] = real_or_inf(ehrenfest_numeric(model));
    } catch (const HorizonError& e) {
      ctx.err << "error: " << e.what() << "\n";
      ctx.report["outputs"] = result;
      return kExitNoCrossing;
    }
  }
  ctx.out << result.dump() << "\n";
  ctx.report["outputs"] = result;
  return kExitOk;
}

int cmd_figure1(Context& ctx, const std::string& model_path, const std::string& hbar_list, double t_max, long points,
                const std::string& out_dir) {
  OscillatorModel model = model_path.empty() ? figure1_model(1.0) : load_model_config(model_path);
  if (points < 2) throw ModelError("--points must be >= 2");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ModelError("--t-max must be a finite value > 0");
  const auto hbars = require_list(hbar_list, "--hbar-list");
  if (hbars.empty()) throw ModelError("--hbar-list is empty");
  for (double h : hbars) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ModelError("--hbar-list entries must be finite values > 0");
  }

  std::vector<double> grid(static_cast<std::size_t>(points));
  for (long j = 0; j < points; ++j) grid[j] = t_max * static_cast<double>(j) / static_cast<double>(points - 1);

  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());

  json curves = json::array();
  for (double h : hbars) {
    model.hbar = h;
    const DepartureCurve curve = departure_curve(model, grid);
    const std::string name = "delta_hbar_" + shortest(h) + ".csv";
    std::ofstream csv(dir / name, std::ios::binary);
    if (!csv) throw IoError("cannot write " + (dir / name).string());
    csv << "t,delta\n";
    for (const auto& [t, d] : curve.samples) csv << sig(t, 17) << "," << sig(d, 17) << "\n";
    csv.close();
    if (!csv) throw IoError("write failed for " + (dir / name).string());

    json entry = {{"hbar", h}, {"file", name}, {"t_numeric", nullptr}, {"t_analytic", nullptr}};
    try {
      const double tn = ehrenfest_numeric(model);
      entry["t_numeric"] = real_or_inf(tn);
      entry["crossing_in_range"] = std::isfinite(tn) && tn <= t_max;
    } catch (const HorizonError&) {
      entry["crossing_in_range"] = false;
    }
    try {
      entry["t_analytic"] = real_or_inf(ehrenfest_analytic(model).t_analytic);
    } catch (const DegenerateCenterError&) {
      throw;
    } catch (const ModelError&) {
    }
    curves.push_back(entry);
  }
  model.hbar = hbars.front();
  json model_doc = model_json(model);
  model_doc.erase("hbar");
  const json index = {{"model", model_doc}, {"t_max", t_max}, {"points", points}, {"curves", curves}};
  std::ofstream idx(dir / "index.json", std::ios::binary);
  if (!idx) throw IoError("cannot write " + (dir / "index.json").string());
  idx << index.dump(2) << "\n";
  idx.close();
  if (!idx) throw IoError("write failed for " + (dir / "index.json").string());
  ctx.out << index.dump() << "\n";
  ctx.report["outputs"] = index;
  return kExitOk;
}

struct McArgs {
  std::string model_path;
  std::string flow;
  std::string expr;
  double sigma = -1.0;
  double t = 0.0;
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
  std::string center;
  std::string omega;
  double hbar = 1.0;
};

int cmd_mc_verify(Context& ctx, const McArgs& a) {
  if (a.samples < 100) throw ModelError("--samples must be >= 100");
  if (!std::isfinite(a.t)) throw ModelError("--t must be finite");
  ctx.report["seeds"] = {a.seed};
  const PhasePoly f = parse_phase_expr(a.expr);

  if (!a.model_path.empty()) {
    const OscillatorModel model = load_model_config(a.model_path);
    if (f.size() != 1 || f.terms().begin()->first.degree() != 1 || !(f.terms().begin()->second == GradedCoeff(1))) {
      throw ModelError("model flows support single-coordinate observables only (q1, p1, q2, ...)");
    }
    const auto& exps = f.terms().begin()->first.exponents();
    const std::size_t coordinate = exps.size() - 1;
    if (coordinate >= model.center.coords.size()) throw ModelError("observable names a mode beyond the model's N");
    const double sigma = a.sigma < 0 ? model.hbar : a.sigma;
    const GaussianEnsemble ensemble{model.center, sigma};
    const TruncatedReport r = verify_smoothing_truncated(model, coordinate, ensemble, a.t, a.samples, a.seed);
    ctx.out << r.to_json() << "\n";
    ctx.report["outputs"] = json::parse(r.to_json());
    return r.pass ? kExitOk : kExitVerificationFailed;
  }

  const std::size_t modes = std::max<std::uint32_t>(1, f.mode_count());
  std::vector<double> center(2 * modes, 1.0);
  if (!a.center.empty()) {
    center = require_list(a.center, "--center");
    check_center(center, f.mode_count());
  }
  const std::size_t n = center.size() / 2;
  std::vector<double> omega(n, 1.0);
  if (!a.omega.empty()) {
    omega = require_list(a.omega, "--omega");
    if (omega.size() != n) throw ModelError("--omega must have one entry per mode");
  }
  if (!(a.sigma > 0.0)) throw ModelError("--sigma must be > 0");
  const FlowMap flow = a.flow == "identity" ? FlowMap::identity(n) : FlowMap::harmonic(omega);
  const GaussianEnsemble ensemble{make_phase_point(center), a.sigma};
  const SmoothingReport r = verify_smoothing_identity(to_numeric(f, a.hbar), ensemble, flow, a.t, a.samples, a.seed);
  ctx.out << r.to_json() << "\n";
  ctx.report["outputs"] = json::parse(r.to_json());
  return r.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_selfcheck(Context& ctx, const std::string& filter, bool corrupt) {
  std::vector<SuiteResult> results;
  try {
    results = run_selfcheck({filter, corrupt});
  } catch (const std::invalid_argument& e) {
    throw ModelError(std::string("--filter: ") + e.what());
  }
  json suites = json::array();
  std::size_t passed = 0, total = 0;
  std::optional<std::string> first;
  std::string first_suite;
  for (const auto& s : results) {
    suites.push_back({{"name", s.name}, {"passed", s.passed}, {"total", s.total}, {"ok", s.ok()}});
    passed += s.passed;
    total += s.total;
    if (!first && s.counterexample) {
      first = s.counterexample;
      first_suite = s.name;
    }
  }
  json doc = {{"suites", suites}, {"passed", passed}, {"total", total}, {"ok", passed == total}};
  doc["counterexample"] = first ? json(first_suite + ": " + *first) : json(nullptr);
  ctx.out << doc.dump() << "\n";
  ctx.report["outputs"] = doc;
  if (first) {
    ctx.err << "FAIL " << first_suite << ": " << *first << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || !std::isfinite(v)) {
      throw ModelError("'" + std::string(text) + "' is not a comma-separated list of finite reals");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string format_complex(double re, double im) {
  if (im == 0.0) return sig(re, 15);
  const std::string imag = sig(std::abs(im), 15) + "i";
  if (re == 0.0) return im < 0 ? "-" + imag : imag;
  return sig(re, 15) + (im < 0 ? " - " : " + ") + imag;
}

OscillatorModel parse_model_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("(document)", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("(document)", "expected a JSON object");
  static const char* fields[] = {"N", "k", "g", "hbar", "omega", "q0", "p0"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find_if(std::begin(fields), std::end(fields), [&](const char* f) { return key == f; }) == std::end(fields)) {
      throw ConfigError(key, "unknown field");
    }
  }
  for (const char* f : fields) {
    if (!doc.contains(f)) throw ConfigError(f, "missing (all fields are required)");
  }
  auto integer = [&](const char* f, long min) {
    const json& v = doc.at(f);
    if (!v.is_number_integer()) throw ConfigError(f, "must be an integer");
    if (v.get<long>() < min) throw ConfigError(f, "must be >= " + std::to_string(min));
    return v.get<long>();
  };
  auto real = [&](const char* f) {
    const json& v = doc.at(f);
    if (!v.is_number()) throw ConfigError(f, "must be a number");
    return v.get<double>();
  };
  OscillatorModel m;
  const long n = integer("N", 1);
  if (n > 4096) throw ConfigError("N", "must be <= 4096");
  m.n_modes = static_cast<int>(n);
  const long k = integer("k", 1);
  if (k > 64) throw ConfigError("k", "must be <= 64");
  m.k = static_cast<int>(k);
  m.g = real("g");
  if (!(m.g >= 0.0)) throw ConfigError("g", "must be >= 0");
  m.hbar = real("hbar");
  if (!(m.hbar > 0.0)) throw ConfigError("hbar", "must be > 0");
  auto array = [&](const char* f) {
    const json& v = doc.at(f);
    if (!v.is_array()) throw ConfigError(f, "must be an array of N numbers");
    if (v.size() != static_cast<std::size_t>(n)) {
      throw ConfigError(f, "has " + std::to_string(v.size()) + " entries, expected N = " + std::to_string(n));
    }
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(f, "entries must be numbers");
      out.push_back(x.get<double>());
    }
    return out;
  };
  m.omega = array("omega");
  const auto q0 = array("q0");
  const auto p0 = array("p0");
  for (long i = 0; i < n; ++i) {
    m.center.coords.push_back(q0[i]);
    m.center.coords.push_back(p0[i]);
  }
  m.validate();
  return m;
}

OscillatorModel load_model_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_config(buf.str());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered quantization and Ehrenfest-time toolkit", "ordquant"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Write a JSON run report to standard error");

  const std::vector<std::string> target_names = {"qp", "pq", "normal", "antinormal"};

  std::string expr, target = "qp";
  auto* order = app.add_subcommand("order", "Canonical ordered form of an expression");
  order->add_option("--expr", expr, "Phase-space (symmetric-quantized first) or operator expression")->required();
  order->add_option("--target", target, "Target ordering")->check(CLI::IsMember(target_names));

  std::string center, mode = "symmetric";
  double hbar = 1.0;
  auto* expect = app.add_subcommand("expect", "Coherent-state expectation value");
  expect->add_option("--expr", expr, "Expression")->required();
  expect->add_option("--center", center, "q1,p1[,q2,p2,...]")->required();
  expect->add_option("--hbar", hbar, "Planck constant")->required();
  expect->add_option("--mode", mode, "symmetric: smooth the phase function; raw: operator as written")
      ->check(CLI::IsMember({"symmetric", "raw"}));

  std::string sigma_text;
  bool inverse = false;
  auto* smooth_cmd = app.add_subcommand("smooth", "Gaussian smoothing of a phase-space polynomial");
  smooth_cmd->add_option("--expr", expr, "Phase-space expression")->required();
  smooth_cmd->add_option("--sigma", sigma_text, "Width: any constant expression (0.2, 1/3, hbar)")->required();
  smooth_cmd->add_flag("--inverse", inverse, "Apply the inverse smoothing");

  std::string model_path, method = "both";
  auto* ehrenfest = app.add_subcommand("ehrenfest", "Ehrenfest time of an oscillator model");
  ehrenfest->add_option("--model", model_path, "Model JSON file")->required();
  ehrenfest->add_option("--method", method, "analytic, numeric or both")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}));

  std::string hbar_list = "1,0.1,0.01", out_dir;
  double t_max = 60.0;
  long points = 601;
  auto* figure1 = app.add_subcommand("figure1", "Departure curves delta(t) as CSV");
  figure1->add_option("--model", model_path, "Model JSON (default: N=2, k=2, omega=1, g=0.1, q=p=1)");
  figure1->add_option("--hbar-list", hbar_list, "Comma-separated hbar values")->capture_default_str();
  figure1->add_option("--t-max", t_max, "Last time sample")->capture_default_str();
  figure1->add_option("--points", points, "Number of time samples")->capture_default_str();
  figure1->add_option("--out", out_dir, "Output directory")->required();

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc-verify", "Monte Carlo check of the smoothing identity");
  auto* mc_model = mc_cmd->add_option("--model", mc.model_path, "Oscillator model JSON (truncated check)");
  auto* mc_flow = mc_cmd->add_option("--flow", mc.flow, "Linear flow")->check(CLI::IsMember({"identity", "harmonic"}));
  mc_model->excludes(mc_flow);
  mc_cmd->add_option("--expr", mc.expr, "Observable")->required();
  mc_cmd->add_option("--sigma", mc.sigma, "Ensemble width (variance sigma/2 per coordinate)");
  mc_cmd->add_option("--t", mc.t, "Time")->required();
  mc_cmd->add_option("--samples", mc.samples, "Sample count")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "RNG seed")->capture_default_str();
  mc_cmd->add_option("--center", mc.center, "Ensemble center for --flow (default all ones)");
  mc_cmd->add_option("--omega", mc.omega, "Frequencies for --flow harmonic (default all ones)");
  mc_cmd->add_option("--hbar", mc.hbar, "Value of hbar inside the expression")->capture_default_str();

  std::string filter;
  bool corrupt = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the exact-identity suites");
  selfcheck->add_option("--filter", filter, "Run one suite")->check(CLI::IsMember(selfcheck_suite_names()));
  selfcheck->add_flag("--corrupt-commutator", corrupt, "Debug: inject a wrong commutator");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx{out, err};
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string command;
  try {
    if (order->parsed()) {
      command = "order";
      ctx.report["inputs"] = {{"expr", expr}, {"target", target}};
      code = cmd_order(ctx, expr, target);
    } else if (expect->parsed()) {
      command = "expect";
      ctx.report["inputs"] = {{"expr", expr}, {"center", center}, {"hbar", hbar}, {"mode", mode}};
      code = cmd_expect(ctx, expr, center, hbar, mode);
    } else if (smooth_cmd->parsed()) {
      command = "smooth";
      ctx.report["inputs"] = {{"expr", expr}, {"sigma", sigma_text}, {"inverse", inverse}};
      code = cmd_smooth(ctx, expr, sigma_text, inverse);
    } else if (ehrenfest->parsed()) {
      command = "ehrenfest";
      ctx.report["inputs"] = {{"model", model_path}, {"method", method}};
      code = cmd_ehrenfest(ctx, model_path, method);
    } else if (figure1->parsed()) {
      command = "figure1";
      ctx.report["inputs"] = {
          {"model", model_path}, {"hbar_list", hbar_list}, {"t_max", t_max}, {"points", points}, {"out", out_dir}};
      code = cmd_figure1(ctx, model_path, hbar_list, t_max, points, out_dir);
    } else if (mc_cmd->parsed()) {
      command = "mc-verify";
      if (mc.model_path.empty() && mc.flow.empty()) throw ModelError("one of --model or --flow is required");
      ctx.report["inputs"] = {{"model", mc.model_path}, {"flow", mc.flow},       {"expr", mc.expr},
                              {"sigma", mc.sigma},      {"t", mc.t},             {"samples", mc.samples},
                              {"seed", mc.seed},        {"center", mc.center},   {"omega", mc.omega}};
      code = cmd_mc_verify(ctx, mc);
    } else if (selfcheck->parsed()) {
      command = "selfcheck";
      ctx.report["inputs"] = {{"filter", filter}, {"corrupt_commutator", corrupt}};
      code = cmd_selfcheck(ctx, filter, corrupt);
    }
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    code = kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    code = kExitIo;
  } catch (const HorizonError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitNoCrossing;
  } catch (const PropagationError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 1;
  }

  if (verbose) {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ctx.report["command"] = command;
    ctx.report["args"] = args;
    ctx.report["exit_code"] = code;
    ctx.report["elapsed_seconds"] = elapsed;
    if (!ctx.report.contains("seeds")) ctx.report["seeds"] = json::array();
    err << ctx.report.dump() << "\n";
  }
  return code;
}

}  // namespace ordquant
