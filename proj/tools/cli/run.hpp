#pragma once

// Command-line front end: configuration, execution, and deterministic
// CSV/JSON rendering. main() is a thin wrapper around run().

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netmed/generators.hpp"

namespace netmed::cli {

enum class Command { kSimulate, kSweepMu, kPairwiseNull, kTriad, kRssiSweep };
enum class Format { kCsv, kJson };

const char* to_string(Command command);

struct RunConfig {
  Command command = Command::kSimulate;
  std::uint64_t seed = 1;
  std::size_t realizations = 500;
  unsigned workers = 1;

  // Synthetic triplets.
  std::optional<GenParams> model;
  std::vector<double> p_values{0.3, 0.5};  // sweep-mu
  std::size_t mu_steps = 11;               // sweep-mu grid 0, 1/(k-1), ..., 1
  bool sweep_rewire = false;               // sweep-mu: add selective-rewiring curves

  // Datasets.
  std::optional<std::string> dataset;
  std::optional<std::string> node_list;
  std::vector<std::string> layers;  // roles A, B, C in order (or subset for pairwise-null)
  bool permute_roles = true;        // triad: cycle C through all three layers
  std::string window_layer;         // rssi-sweep
  std::size_t windows = 7;

  std::size_t bins = 30;
  std::size_t surrogates = 20;
  bool degree_preserving_null = false;
  bool one_sided_xor = false;

  std::string out = "-";
  Format format = Format::kCsv;

  // Throws InvalidArgument.
  void validate() const;
  // Result-relevant settings only: `workers` and `out` are excluded so the
  // echoed config never makes otherwise identical runs differ.
  nlohmann::ordered_json to_json() const;
};

// Rows are JSON arrays aligned with `columns`.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<nlohmann::ordered_json> rows;
};

struct Artifact {
  std::vector<Table> tables;  // tables[0] is the primary table
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::size_t skipped = 0;
};

// Pure computation; throws netmed::Error.
Artifact execute(const RunConfig& config);

std::string render_json(const RunConfig& config, const Artifact& artifact);
std::string render_csv(const RunConfig& config, const Table& table);

// Writes the artifact to config.out ("-" = `stdout`). CSV output to a file
// produces one file per table: <out> for the primary table and
// <stem>.<table>.csv for the others. Files are written to a temporary name
// and renamed on success.
void write_artifact(const RunConfig& config, const Artifact& artifact, std::ostream& stdout_);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitDegenerate = 4;

// Parses argv; returns the exit code on parse failure or --help.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err);

// Full pipeline with error records on `err`. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netmed::cli
