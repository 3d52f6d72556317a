#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/hpga/types.hpp"

namespace cbir::cli {

/// Every setting a pipeline stage may need. Fields map one-to-one onto the
/// command-line flags and config-file keys of the same name.
struct RunConfig {
  std::filesystem::path docs;
  std::filesystem::path queries;
  std::filesystem::path qrels;
  std::filesystem::path stoplist;  ///< empty: the shipped list
  std::filesystem::path out = ".";
  std::string dataset = "collection";

  std::size_t k = 10;
  /// 0 selects ceil(k / 2).
  std::size_t m = 0;
  std::size_t max_iter = 100;
  std::size_t generations = 50;  ///< hpga::GaConfig::kPopulationSize for the population-size rule
  std::size_t migration_interval = 5;
  std::optional<std::size_t> migration_count;
  std::uint64_t seed = 1;
  bool mutation = false;
  double mutation_rate = 0.01;
  hpga::CrossoverSpace crossover = hpga::CrossoverSpace::support_union;

  std::string engine = "hpga";
  std::string engine_b = "classic";
  std::size_t top_n = 10;
  std::size_t workers = 1;

  std::string query_text;
  std::optional<DocId> query_id;
  std::filesystem::path report_a;  ///< compare from existing eval CSVs instead of running engines
  std::filesystem::path report_b;
  bool per_query = false;
  bool full_precision = false;
  bool trace = false;

  hpga::GaConfig ga_config(std::size_t vocabulary_size) const;
};

inline const std::filesystem::path kIndexFile = "index.bin";
inline const std::filesystem::path kClusterFile = "clusters.tsv";

/// Engines accepted by search, eval and compare.
inline const std::vector<std::string> kEngines{"hpga", "classic", "ga"};

// Each command writes its artifacts under config.out and a one-line
// summary (or the top-n table, for search) to `log`. Errors are thrown as
// cbir::Error.
void cmd_index(const RunConfig& config, std::ostream& log);
void cmd_cluster(const RunConfig& config, std::ostream& log);
void cmd_search(const RunConfig& config, std::ostream& log);
void cmd_eval(const RunConfig& config, std::ostream& log);
void cmd_compare(const RunConfig& config, std::ostream& log);

/// Output file names, relative to config.out.
std::filesystem::path ranked_file(const std::string& engine);
std::filesystem::path eval_file(const std::string& engine);
std::filesystem::path compare_file(const std::string& engine_a, const std::string& engine_b);

/// Parses argv-style arguments (without the program name) and runs the
/// chosen subcommand. Returns the process exit status; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbir::cli
