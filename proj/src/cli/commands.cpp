#include "cbir/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cbir/cli/fixture.hpp"
#include "cbir/corpus/smart.hpp"
#include "cbir/evalkit/baselines.hpp"
#include "cbir/evalkit/report.hpp"
#include "cbir/hpga/engine.hpp"
#include "cbir/kmeans/cluster_file.hpp"
#include "cbir/kmeans/kmeans.hpp"
#include "cbir/util/error.hpp"
#include "cbir/util/parallel.hpp"
#include "cbir/vsm/index_file.hpp"
#include "cbir/vsm/weighting.hpp"

namespace cbir::cli {
namespace {

corpus::Analyzer make_analyzer(const RunConfig& config) {
  if (config.stoplist.empty()) return corpus::Analyzer{};
  return corpus::Analyzer(corpus::StopList::load(config.stoplist));
}

void require_file(const std::filesystem::path& path, const std::string& what) {
  if (path.empty()) throw Error("missing --" + what);
  if (!std::filesystem::is_regular_file(path)) throw Error(what + " file not found: " + path.string());
}

void check_engine(const std::string& engine) {
  if (std::find(kEngines.begin(), kEngines.end(), engine) == kEngines.end())
    throw Error("unknown engine '" + engine + "' (expected hpga, classic or ga)");
}

template <typename Write>
void write_text_file(const std::filesystem::path& path, Write&& write) {
  std::ostringstream buffer;
  write(buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << buffer.str();
  if (!out) throw Error("failed writing " + path.string());
}

std::string format_score(double score) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", score);
  return buffer;
}

// Loaded pipeline artifacts shared by search, eval and compare.
struct Workspace {
  vsm::Index index;
  std::optional<kmeans::ClusterSet> clusters;

  static Workspace open(const RunConfig& config, bool need_clusters) {
    const auto index_path = config.out / kIndexFile;
    if (!std::filesystem::exists(index_path))
      throw Error("index not found at " + index_path.string() + "; run 'index' first");
    Workspace ws;
    ws.index = vsm::load_index(index_path);
    if (!need_clusters) return ws;

    const auto cluster_path = config.out / kClusterFile;
    if (!std::filesystem::exists(cluster_path))
      throw Error("hpga engine needs the cluster dump " + cluster_path.string() + "; run 'cluster' first");
    const auto dump = kmeans::load_cluster_dump(cluster_path);
    if (dump.doc_ids != ws.index.doc_ids)
      throw Error("cluster dump " + cluster_path.string() + " does not match the index; re-run 'cluster'");
    ws.clusters = kmeans::rebuild_clusters(ws.index.doc_ids, ws.index.vectors, dump.k, dump.assignment,
                                           dump.iterations_run);
    return ws;
  }

  hpga::RankedList rank(const std::string& engine, const vsm::TermVector& query, DocId query_id,
                        const RunConfig& config, std::size_t workers,
                        std::vector<hpga::GenerationStats>* trace = nullptr) const {
    auto ga = config.ga_config(index.vocab.size());
    ga.workers = workers;
    if (engine == "classic") return evalkit::classic_ir_rank(query, index.doc_ids, index.vectors, query_id);
    if (engine == "ga") return evalkit::ga_ir_rank(query, index.doc_ids, index.vectors, ga, query_id);
    const std::size_t m = config.m == 0 ? (clusters->k + 1) / 2 : config.m;
    if (m > clusters->k) throw Error("--m must lie in [1, " + std::to_string(clusters->k) + "]");
    const auto selected = kmeans::select_relevant_clusters(*clusters, query, m);
    return hpga::run_hpga(index.vectors, *clusters, selected, query, ga, query_id, trace);
  }
};

std::vector<corpus::QueryDoc> load_queries(const RunConfig& config) {
  require_file(config.queries, "queries");
  return corpus::parse_smart_queries(config.queries, make_analyzer(config));
}

evalkit::EvalReport evaluate_engine(const RunConfig& config, const std::string& engine) {
  check_engine(engine);
  require_file(config.qrels, "qrels");
  const auto qrels = evalkit::load_qrels(config.qrels);
  const auto queries = load_queries(config);
  const auto ws = Workspace::open(config, engine == "hpga");

  // Queries run concurrently; each engine run is then single-threaded.
  std::vector<hpga::RankedList> rankings(queries.size());
  parallel_for(queries.size(), config.workers, [&](std::size_t i) {
    if (qrels.relevant(queries[i].id).empty()) {
      rankings[i].query_id = queries[i].id;
      return;
    }
    rankings[i] = ws.rank(engine, vsm::query_vector(queries[i], ws.index.vocab), queries[i].id, config, 1);
  });
  return evalkit::build_report(rankings, qrels, config.dataset, engine);
}

}  // namespace

hpga::GaConfig RunConfig::ga_config(std::size_t vocabulary_size) const {
  hpga::GaConfig ga;
  ga.generations = generations;
  ga.migration_interval = migration_interval;
  ga.migration_count = migration_count;
  ga.seed = seed;
  ga.mutation_enabled = mutation;
  ga.mutation_rate = mutation_rate;
  ga.crossover_space = crossover;
  ga.vocabulary_size = vocabulary_size;
  ga.workers = workers;
  return ga;
}

std::filesystem::path ranked_file(const std::string& engine) { return "ranked_" + engine + ".csv"; }
std::filesystem::path eval_file(const std::string& engine) { return "eval_" + engine + ".csv"; }
std::filesystem::path compare_file(const std::string& a, const std::string& b) {
  return "compare_" + a + "_vs_" + b + ".csv";
}

void cmd_index(const RunConfig& config, std::ostream& log) {
  require_file(config.docs, "docs");
  const auto docs = corpus::parse_smart_docs(config.docs, make_analyzer(config));
  if (docs.empty()) throw Error("no documents in " + config.docs.string() + "; index not written");
  const auto index = vsm::build_index(docs, config.workers);
  std::filesystem::create_directories(config.out);
  vsm::save_index(config.out / kIndexFile, index);
  log << "indexed " << index.doc_ids.size() << " docs, " << index.vocab.size() << " terms\n";
}

void cmd_cluster(const RunConfig& config, std::ostream& log) {
  const auto ws = Workspace::open(config, false);
  const auto n = ws.index.doc_ids.size();
  if (config.k < 1 || config.k > n)
    throw Error("--k = " + std::to_string(config.k) + " must lie in [1, " + std::to_string(n) + "]");
  kmeans::KMeansOptions options;
  options.k = config.k;
  options.seed = config.seed;
  options.max_iter = config.max_iter;
  options.workers = config.workers;
  const auto clusters = kmeans::kmeans_cluster(ws.index.doc_ids, ws.index.vectors, options);
  kmeans::save_cluster_dump(config.out / kClusterFile, clusters);

  log << "clustered " << n << " docs into " << clusters.k << " clusters in " << clusters.iterations_run
      << " iterations; sizes";
  for (const auto s : clusters.sizes()) log << ' ' << s;
  log << '\n';
}

void cmd_search(const RunConfig& config, std::ostream& log) {
  check_engine(config.engine);
  const auto ws = Workspace::open(config, config.engine == "hpga");

  corpus::QueryDoc query;
  if (config.query_id) {
    const auto queries = load_queries(config);
    const auto it = std::find_if(queries.begin(), queries.end(),
                                 [&](const corpus::QueryDoc& q) { return q.id == *config.query_id; });
    if (it == queries.end()) throw Error("query " + std::to_string(*config.query_id) + " not in " + config.queries.string());
    query = *it;
  } else {
    if (config.query_text.empty()) throw Error("search needs --query-text or --query-id");
    query.text = config.query_text;
    query.tokens = make_analyzer(config).analyze(query.text);
  }

  const auto qvec = vsm::query_vector(query, ws.index.vocab);
  std::vector<hpga::GenerationStats> trace;
  const auto ranked = ws.rank(config.engine, qvec, query.id, config, config.workers, config.trace ? &trace : nullptr);

  std::filesystem::create_directories(config.out);
  write_text_file(config.out / ranked_file(config.engine), [&](std::ostream& out) {
    out << "rank,doc_id,score\n";
    for (std::size_t i = 0; i < ranked.entries.size(); ++i)
      out << i + 1 << ',' << ranked.entries[i].doc << ',' << format_score(ranked.entries[i].score) << '\n';
  });
  if (config.trace && config.engine == "hpga")
    write_text_file(config.out / "trace_hpga.csv", [&](std::ostream& out) { hpga::write_trace(out, trace); });

  const std::size_t shown = std::min(config.top_n, ranked.entries.size());
  log << "rank\tdoc_id\tscore\n";
  for (std::size_t i = 0; i < shown; ++i)
    log << i + 1 << '\t' << ranked.entries[i].doc << '\t' << format_score(ranked.entries[i].score) << '\n';
}

void cmd_eval(const RunConfig& config, std::ostream& log) {
  const auto report = evaluate_engine(config, config.engine);
  std::filesystem::create_directories(config.out);
  const evalkit::CsvOptions options{config.full_precision, config.per_query};
  write_text_file(config.out / eval_file(config.engine),
                  [&](std::ostream& out) { evalkit::write_report_csv(out, report, options); });
  log << "evaluated " << report.evaluated << " queries (" << report.skipped << " without judgments), engine "
      << config.engine << ", average precision " << evalkit::format_average(report.averaged.avg, {}) << '\n';
}

void cmd_compare(const RunConfig& config, std::ostream& log) {
  evalkit::PrecisionRow a, b;
  std::string label_a = config.engine;
  std::string label_b = config.engine_b;
  if (!config.report_a.empty() || !config.report_b.empty()) {
    require_file(config.report_a, "report-a");
    require_file(config.report_b, "report-b");
    std::ifstream in_a(config.report_a), in_b(config.report_b);
    a = evalkit::read_precision_row(in_a, config.report_a.string());
    b = evalkit::read_precision_row(in_b, config.report_b.string());
  } else {
    a = evaluate_engine(config, config.engine).averaged;
    b = evaluate_engine(config, config.engine_b).averaged;
  }
  std::filesystem::create_directories(config.out);
  const evalkit::CsvOptions options{config.full_precision, false};
  const auto path = config.out / compare_file(label_a, label_b);
  write_text_file(path, [&](std::ostream& out) { evalkit::write_comparison_csv(out, label_a, a, label_b, b, options); });
  const auto improvement = evalkit::improvement_row(a, b);
  log << "compared " << label_a << " vs " << label_b << ": average improvement "
      << evalkit::format_average(improvement.avg, {}) << " points, written to " << path.string() << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster-based retrieval with a hierarchical parallel genetic algorithm", "cbir"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat 'key = value' file; keys are the long flag names");

  RunConfig config;
  std::string generations = "50";
  std::string crossover = "support";
  std::size_t migration_count = 0;
  long long query_id = 0;
  FixtureSpec fixture;

  app.add_option("--docs", config.docs, "SMART document collection");
  app.add_option("--queries", config.queries, "SMART query file");
  app.add_option("--qrels", config.qrels, "Relevance judgments ('query-id doc-id' per line)");
  app.add_option("--stoplist", config.stoplist, "Stopword file (default: shipped English list)");
  app.add_option("--out", config.out, "Artifact directory")->capture_default_str();
  app.add_option("--dataset", config.dataset, "Dataset label for reports")->capture_default_str();
  app.add_option("--k", config.k, "Number of k-means clusters")->capture_default_str();
  app.add_option("--m", config.m, "Clusters selected per query (0 = ceil(k/2))")->capture_default_str();
  app.add_option("--max-iter", config.max_iter, "k-means iteration cap")->capture_default_str();
  app.add_option("--generations", generations, "GA generations, or 'population-size'")->capture_default_str();
  app.add_option("--migration-interval", config.migration_interval, "Generations between migrations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--migration-count", migration_count, "Migrants per ring edge (default: 5% of the deme)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Master random seed")->capture_default_str();
  app.add_flag("--mutation", config.mutation, "Enable per-gene mutation of offspring");
  app.add_option("--mutation-rate", config.mutation_rate, "Per-gene mutation probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--crossover", crossover, "Crossover positions: support or vocabulary")
      ->capture_default_str()
      ->check(CLI::IsMember({"support", "vocabulary"}));
  app.add_option("--engine", config.engine, "Retrieval engine")->capture_default_str()->check(CLI::IsMember(kEngines));
  app.add_option("--engine-b", config.engine_b, "Baseline engine for compare")
      ->capture_default_str()
      ->check(CLI::IsMember(kEngines));
  app.add_option("--top-n", config.top_n, "Results printed by search")->capture_default_str();
  app.add_option("--workers", config.workers, "Worker thread cap")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--query-text", config.query_text, "Free-text query for search");
  app.add_option("--query-id", query_id, "Query id from --queries for search")->check(CLI::PositiveNumber);
  app.add_option("--report-a", config.report_a, "Eval CSV for the first side of compare");
  app.add_option("--report-b", config.report_b, "Eval CSV for the second side of compare");
  app.add_flag("--per-query", config.per_query, "Also write per-query precision rows");
  app.add_flag("--full-precision", config.full_precision, "Write full-precision numbers instead of table rounding");
  app.add_flag("--trace", config.trace, "Write the per-generation GA trace (search, hpga)");
  app.add_option("--kind", fixture.kind, "Fixture kind: duplicates, disjoint or separated")
      ->capture_default_str()
      ->check(CLI::IsMember({"duplicates", "disjoint", "separated"}));
  app.add_option("--topics", fixture.topics, "Fixture topic count")->capture_default_str();
  app.add_option("--docs-per-topic", fixture.docs_per_topic, "Fixture documents per topic")->capture_default_str();
  app.add_option("--relevant-per-query", fixture.relevant_per_query, "Fixture relevant documents per query")
      ->capture_default_str();

  auto* index = app.add_subcommand("index", "Parse and index a document collection");
  auto* cluster = app.add_subcommand("cluster", "Partition the index with k-means");
  auto* search = app.add_subcommand("search", "Rank documents for one query");
  auto* eval = app.add_subcommand("eval", "Interpolated precision over a query set");
  auto* compare = app.add_subcommand("compare", "Precision comparison of two engines");
  auto* fixture_cmd = app.add_subcommand("fixture", "Write a synthetic test collection");
  for (auto* sub : {index, cluster, search, eval, compare, fixture_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (generations == "population-size") {
      config.generations = hpga::GaConfig::kPopulationSize;
    } else {
      std::size_t used = 0;
      const auto value = std::stoull(generations, &used);
      if (used != generations.size() || value == 0) throw std::invalid_argument(generations);
      config.generations = value;
    }
  } catch (const std::exception&) {
    err << "error: --generations must be a positive integer or 'population-size'\n";
    return 2;
  }
  if (migration_count > 0) config.migration_count = migration_count;
  if (query_id > 0) config.query_id = static_cast<DocId>(query_id);
  config.crossover = crossover == "vocabulary" ? hpga::CrossoverSpace::vocabulary : hpga::CrossoverSpace::support_union;
  fixture.seed = config.seed;

  try {
    if (*index) cmd_index(config, out);
    if (*cluster) cmd_cluster(config, out);
    if (*search) cmd_search(config, out);
    if (*eval) cmd_eval(config, out);
    if (*compare) cmd_compare(config, out);
    if (*fixture_cmd) {
      write_fixture(config.out, fixture);
      out << "wrote " << fixture.kind << " fixture to " << config.out.string() << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cbir::cli
