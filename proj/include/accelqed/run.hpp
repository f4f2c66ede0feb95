#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "accelqed/atom.hpp"
#include "accelqed/lamb.hpp"
#include "accelqed/sweep.hpp"

namespace accelqed::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr const char* kConstantSetId = "codata2018-cgs";

// All validation problems found in a config, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

struct AtomSource {
  // builtin name or dataset path
  enum class Kind { builtin, dataset } kind = Kind::builtin;
  std::string ref = "hydrogen";
};

struct PolSource {
  struct Builtin { std::string name; };
  struct Dataset { std::string path; };
  std::variant<Builtin, Dataset, atom::LorentzPol, atom::StaticPol> source;
};

struct KernelSource {
  enum class Kind { builtin_test_decaying, csv } kind = Kind::csv;
  std::string path;          // csv
  double scale_rad_s = 0.0;  // builtin test kernel scale
};

struct OutputSpec {
  std::string path;
  enum class Format { csv, json } format = Format::csv;
};

struct RunConfig {
  std::string command;  // unruh | lamb | wall | pair (sweep target resolved)
  bool via_sweep = false;

  std::optional<AtomSource> atom;           // lamb, wall
  std::optional<PolSource> atom_a, atom_b;  // pair
  std::optional<KernelSource> kernel;       // wall

  // expanded grids, cartesian product in declaration order
  std::vector<double> a_grid;   // cm/s^2
  std::vector<double> z0_grid;  // cm
  std::vector<double> r_grid;   // cm
  std::vector<double> t_grid;   // s

  quad::QuadConfig quad;
  lamb::CutoffPolicy cutoff;
  std::optional<OutputSpec> output;
};

RunConfig parse_config(const std::string& json_text);

// Canonical serialization; parse(serialize(c)) == c field-for-field.
std::string serialize_config(const RunConfig& c);

// FNV-1a 64 over the canonical serialization, hex-encoded. The output
// block is excluded: the hash identifies the computation, not its routing.
std::string config_hash(const RunConfig& c);

struct RunResult {
  int exit_status = 0;  // 0 ok, 2 partial per-row failures
  std::vector<std::string> files_written;
};

// Evaluate the configured grid and emit CSV/JSON. `expected_command`, when
// nonempty, must match the config's command. Physics failures never abort
// remaining grid points; they mark the row unconverged and yield exit 2.
RunResult run(const RunConfig& config, const std::string& expected_command = "",
              sweep::Execution exec = sweep::Execution::parallel, int threads = 0);

std::string version_string();

}  // namespace accelqed::cli
