#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ordquant/errors.hpp"
#include "ordquant/oscillator.hpp"

namespace ordquant {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNoCrossing = 3,
  kExitIo = 4,
  kExitVerificationFailed = 5,
};

/// Invalid model document; field() names the offending key.
class ConfigError : public ModelError {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : ModelError("model config field '" + field + "': " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Parses {"N", "k", "g", "hbar", "omega", "q0", "p0"}; every field is
/// required and unknown fields are rejected.
OscillatorModel parse_model_config(std::string_view json_text);
OscillatorModel load_model_config(const std::filesystem::path& path);

/// Parses a comma-separated list of reals ("1,0.5"). Throws ModelError.
std::vector<double> parse_real_list(std::string_view text);

/// Formats a complex value with 15 significant digits: "1.05", "1 + 0.5i".
std::string format_complex(double re, double im);

/// Entry point of the ordquant tool. args excludes the program name.
/// Payload goes to out, diagnostics to err; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordquant
