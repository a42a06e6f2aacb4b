#pragma once

// Batch front end: configuration parsing and the scales / table / degeneracy /
// sweep / selection commands. Every command renders to a string so output is
// byte-for-byte reproducible.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlt/circuit.hpp"
#include "tlt/hamiltonian.hpp"
#include "tlt/majorana.hpp"

namespace tlt::cli {

/// Raised for anything the user can fix in the configuration (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode : int { ok = 0, config_error = 2, numerical_failure = 3 };

/// Inclusive grid start, start + step, ... up to end.
struct SweepSpec {
  double start;
  double end;
  double step;

  /// "start:end:step"
  static SweepSpec parse(std::string_view text);
  void validate() const;
  std::vector<double> points() const;
};

enum class OutputFormat { csv, json };

enum class SweepVariable { flux_q, cutoff, delta };

std::string_view to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(std::string_view name);

struct RunConfig {
  circuit::CircuitParams params{};
  int fock_cutoff = 5;
  ham::PotentialMode mode = ham::PotentialMode::quartic_ejq;
  ham::ChargeCouplingPrefactors prefactors{};
  OutputFormat format = OutputFormat::csv;

  int table = 1;
  majorana::ConfigLabel config_label = majorana::ConfigLabel::A;
  majorana::Parity parity = majorana::Parity::even;
  SweepVariable sweep_variable = SweepVariable::flux_q;
  std::optional<SweepSpec> range;

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

/// Flat JSON object. Unknown keys and mistyped values raise ConfigError with
/// the key named. An empty object yields the reference device.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

std::string cmd_scales(const RunConfig& cfg);
std::string cmd_table(const RunConfig& cfg);
std::string cmd_degeneracy(const RunConfig& cfg);
std::string cmd_sweep(const RunConfig& cfg);
std::string cmd_selection(const RunConfig& cfg);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tlt::cli
