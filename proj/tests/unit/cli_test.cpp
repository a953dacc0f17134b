#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ordquant/cli.hpp"

using namespace ordquant;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("ordquant_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                         ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

const char* kFigureModel = R"({"N":2,"k":2,"g":0.1,"hbar":0.01,"omega":[1,1],"q0":[1,1],"p0":[1,1]})";

}  // namespace

TEST(CliOrder, Examples) {
  EXPECT_EQ(run({"order", "--expr", "q^2*p"}).out, "Q^2*P - i*hbar*Q\n");
  EXPECT_EQ(run({"order", "--expr", "P*Q"}).out, "Q*P - i*hbar\n");
  EXPECT_EQ(run({"order", "--expr", "a*ad", "--target", "normal"}).out, "ad*a + 1\n");
  EXPECT_EQ(run({"order", "--expr", "Q*P", "--target", "pq"}).out, "P*Q + i*hbar\n");
}

TEST(CliOrder, ParseErrorsExitTwo) {
  const auto r = run({"order", "--expr", "q^"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"order"}).code, kExitUsage);
  EXPECT_EQ(run({"order", "--expr", "q", "--target", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
}

TEST(CliExpect, Examples) {
  EXPECT_EQ(run({"expect", "--expr", "q^2", "--center", "1,0", "--hbar", "0.1"}).out, "1.05\n");
  EXPECT_EQ(run({"expect", "--expr", "Q*P", "--center", "1,1", "--hbar", "1", "--mode", "raw"}).out, "1 + 0.5i\n");
  EXPECT_EQ(run({"expect", "--expr", "q*p", "--center", "1,1", "--hbar", "1"}).out, "1\n");
}

TEST(CliExpect, CenterErrors) {
  EXPECT_EQ(run({"expect", "--expr", "q", "--center", "1", "--hbar", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"expect", "--expr", "q2", "--center", "1,0", "--hbar", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"expect", "--expr", "q", "--center", "1,x", "--hbar", "1"}).code, kExitUsage);
}

TEST(CliSmooth, Examples) {
  EXPECT_EQ(run({"smooth", "--expr", "q^2", "--sigma", "1"}).out, "q^2 + 1/2\n");
  EXPECT_EQ(run({"smooth", "--expr", "q^2 + 1/2", "--sigma", "1", "--inverse"}).out, "q^2\n");
  EXPECT_EQ(run({"smooth", "--expr", "q^4", "--sigma", "2"}).out, "q^4 + 6*q^2 + 3\n");
  EXPECT_EQ(run({"smooth", "--expr", "q^2", "--sigma", "hbar"}).out, "q^2 + 1/2*hbar\n");
  EXPECT_EQ(run({"smooth", "--expr", "q^2", "--sigma", "-1"}).code, kExitUsage);
}

TEST(CliEhrenfest, FigureOneModel) {
  TempDir dir;
  const auto path = dir.write("model.json", kFigureModel);
  const auto r = run({"ehrenfest", "--model", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["t_analytic"].get<double>(), 49.875);
  EXPECT_NEAR(j["t_numeric"].get<double>(), 49.875, 0.05 * 49.875);
}

TEST(CliEhrenfest, HarmonicAndBadModels) {
  TempDir dir;
  const auto harmonic = dir.write("h.json", R"({"N":1,"k":2,"g":0,"hbar":0.1,"omega":[1],"q0":[1],"p0":[1]})");
  const auto j = nlohmann::json::parse(run({"ehrenfest", "--model", harmonic}).out);
  EXPECT_EQ(j["t_numeric"], "inf");
  EXPECT_EQ(j["t_analytic"], "inf");

  const auto short_omega = dir.write("s.json", R"({"N":2,"k":2,"g":0.1,"hbar":0.1,"omega":[1],"q0":[1,1],"p0":[1,1]})");
  const auto r = run({"ehrenfest", "--model", short_omega});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("omega"), std::string::npos);

  const auto extra = dir.write("e.json", R"({"N":1,"k":2,"g":0.1,"hbar":0.1,"omega":[1],"q0":[1],"p0":[1],"x":1})");
  EXPECT_NE(run({"ehrenfest", "--model", extra}).err.find("'x'"), std::string::npos);
  EXPECT_EQ(run({"ehrenfest", "--model", (dir.path() / "missing.json").string()}).code, kExitIo);

  const auto far = dir.write("far.json", R"({"N":1,"k":2,"g":0.1,"hbar":1e-14,"omega":[1],"q0":[1],"p0":[1]})");
  EXPECT_EQ(run({"ehrenfest", "--model", far, "--method", "numeric"}).code, kExitNoCrossing);
}

TEST(ModelConfig, FieldsAreNamed) {
  try {
    parse_model_config(R"({"N":1,"k":2,"g":0.1,"hbar":0.1,"omega":[1],"q0":[1]})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "p0");
  }
  try {
    parse_model_config(R"({"N":1,"k":2,"g":"x","hbar":0.1,"omega":[1],"q0":[1],"p0":[1]})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "g");
  }
  const auto m = parse_model_config(kFigureModel);
  EXPECT_EQ(m.n_modes, 2);
  EXPECT_EQ(m.center.coords, (std::vector<double>{1, 1, 1, 1}));
}

TEST(CliFigure1, WritesCurvesMatchingNumericCrossing) {
  TempDir dir;
  const auto out_dir = (dir.path() / "fig").string();
  const auto r = run({"figure1", "--out", out_dir, "--hbar-list", "1", "--t-max", "10", "--points", "1001"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto index = nlohmann::json::parse(r.out);
  ASSERT_EQ(index["curves"].size(), 1u);
  const auto& curve = index["curves"][0];
  EXPECT_TRUE(curve["crossing_in_range"].get<bool>());

  std::ifstream csv(fs::path(out_dir) / curve["file"].get<std::string>());
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "t,delta");
  double t_prev = 0, d_prev = 0, crossing = -1;
  int rows = 0;
  while (std::getline(csv, line)) {
    const auto comma = line.find(',');
    const double t = std::stod(line.substr(0, comma));
    const double d = std::stod(line.substr(comma + 1));
    if (rows == 0) EXPECT_EQ(d, 0.0);
    if (crossing < 0 && d >= 1.0) crossing = t_prev + (1.0 - d_prev) * (t - t_prev) / (d - d_prev);
    t_prev = t;
    d_prev = d;
    ++rows;
  }
  EXPECT_EQ(rows, 1001);
  // Linear interpolation on a 0.01 grid of a smooth curve.
  EXPECT_NEAR(crossing, curve["t_numeric"].get<double>(), 1e-3);
  EXPECT_NEAR(curve["t_numeric"].get<double>(), 3.083015254419297, 1e-6);
  EXPECT_TRUE(fs::exists(fs::path(out_dir) / "index.json"));
}

TEST(CliFigure1, Errors) {
  TempDir dir;
  EXPECT_EQ(run({"figure1", "--out", (dir.path() / "a").string(), "--t-max", "0"}).code, kExitUsage);
  const auto file = dir.write("blocker", "x");
  EXPECT_EQ(run({"figure1", "--out", (fs::path(file) / "sub").string()}).code, kExitIo);
}

TEST(CliMcVerify, HarmonicFlowPasses) {
  const auto r = run({"mc-verify", "--flow", "harmonic", "--expr", "q^3*p", "--sigma", "1", "--t", "0.7", "--center",
                      "1,0.5", "--samples", "200000", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["seed"], 7);
}

TEST(CliMcVerify, ModelTruncatedCheck) {
  TempDir dir;
  const auto path = dir.write("m.json", R"({"N":1,"k":2,"g":0.1,"hbar":0.1,"omega":[1],"q0":[1],"p0":[1]})");
  const auto r = run({"mc-verify", "--model", path, "--expr", "q", "--t", "1", "--samples", "100000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
  EXPECT_EQ(run({"mc-verify", "--model", path, "--expr", "q*p", "--t", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"mc-verify", "--expr", "q", "--t", "1"}).code, kExitUsage);
}

TEST(CliSelfcheck, PassesAndDetectsCorruption) {
  const auto ok = run({"selfcheck"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["ok"].get<bool>());
  const auto one = nlohmann::json::parse(run({"selfcheck", "--filter", "symmetric-expectation"}).out);
  ASSERT_EQ(one["suites"].size(), 1u);
  EXPECT_EQ(one["suites"][0]["name"], "symmetric-expectation");
  EXPECT_EQ(run({"selfcheck", "--filter", "nope"}).code, kExitUsage);
  const auto bad = run({"selfcheck", "--corrupt-commutator", "--filter", "symmetrize"});
  EXPECT_EQ(bad.code, kExitVerificationFailed);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["counterexample"].is_null());
}

TEST(CliVerbose, EmitsRunReport) {
  const auto r = run({"--verbose", "order", "--expr", "P*Q"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["command"], "order");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_TRUE(j.contains("elapsed_seconds"));
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cases = {
      {"order", "--expr", "(q+p)^4"},
      {"expect", "--expr", "q^3*p^2", "--center", "0.3,-1.2", "--hbar", "0.05"},
      {"mc-verify", "--flow", "harmonic", "--expr", "q*p", "--sigma", "0.5", "--t", "1", "--samples", "20000"},
  };
  for (const auto& args : cases) EXPECT_EQ(run(args).out, run(args).out);
}

TEST(FormatComplex, Examples) {
  EXPECT_EQ(format_complex(1.05, 0.0), "1.05");
  EXPECT_EQ(format_complex(1.0, 0.5), "1 + 0.5i");
  EXPECT_EQ(format_complex(1.0, -0.5), "1 - 0.5i");
  EXPECT_EQ(parse_real_list("1, 0.5,-2"), (std::vector<double>{1, 0.5, -2}));
  EXPECT_THROW(parse_real_list("1,,2"), ModelError);
}
