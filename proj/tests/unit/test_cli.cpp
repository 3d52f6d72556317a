#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cbir/cli/commands.hpp"
#include "cbir/cli/fixture.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using cbir::testing::read_file;
using cbir::testing::scratch_dir;
using cbir::testing::write_file;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cbir::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Fixture files plus data flags for a scratch workspace.
struct Workspace {
  fs::path dir;

  explicit Workspace(const std::string& name, const std::string& kind = "duplicates") : dir(scratch_dir(name)) {
    const auto r = run({"fixture", "--kind", kind, "--out", dir.string()});
    REQUIRE(r.code == 0);
  }

  std::vector<std::string> with(std::vector<std::string> args, const fs::path& out) const {
    for (const auto& extra : {std::vector<std::string>{"--docs", (dir / cbir::cli::kFixtureDocs).string()},
                              {"--queries", (dir / cbir::cli::kFixtureQueries).string()},
                              {"--qrels", (dir / cbir::cli::kFixtureQrels).string()},
                              {"--out", out.string()}})
      args.insert(args.end(), extra.begin(), extra.end());
    return args;
  }
  std::vector<std::string> with(std::vector<std::string> args) const { return with(std::move(args), dir); }
};

std::string line_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return line;
  return {};
}

}  // namespace

TEST_CASE("index writes a byte-identical index and reports its size") {
  Workspace ws("cli_index");
  const auto first = run(ws.with({"index"}));
  REQUIRE(first.code == 0);
  CHECK(first.out.rfind("indexed 32 docs, ", 0) == 0);
  const auto bytes = read_file(ws.dir / cbir::cli::kIndexFile);
  CHECK(run(ws.with({"index", "--workers", "4"})).code == 0);
  CHECK(read_file(ws.dir / cbir::cli::kIndexFile) == bytes);

  const auto empty_dir = scratch_dir("cli_index_empty");
  write_file(empty_dir / "empty.all", "");
  const auto empty = run({"index", "--docs", (empty_dir / "empty.all").string(), "--out", empty_dir.string()});
  CHECK(empty.code != 0);
  CHECK(empty.err.find("no documents") != std::string::npos);
  CHECK_FALSE(fs::exists(empty_dir / cbir::cli::kIndexFile));

  write_file(empty_dir / "bad.all", ".I 1\n.W\nfine\n.I two\n.W\nbroken\n");
  const auto bad = run({"index", "--docs", (empty_dir / "bad.all").string(), "--out", empty_dir.string()});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("bad.all") != std::string::npos);
  CHECK(bad.err.find('4') != std::string::npos);

  CHECK(run({"index", "--docs", "/nonexistent/docs.all", "--out", empty_dir.string()}).code != 0);
}

TEST_CASE("cluster dumps are reproducible and cover the corpus") {
  Workspace ws("cli_cluster");
  REQUIRE(run(ws.with({"index"})).code == 0);
  const auto one = run(ws.with({"cluster", "--k", "1"}));
  REQUIRE(one.code == 0);
  CHECK(one.out.find("sizes 32\n") != std::string::npos);

  const auto four = run(ws.with({"cluster", "--k", "4", "--seed", "7"}));
  REQUIRE(four.code == 0);
  const auto dump = read_file(ws.dir / cbir::cli::kClusterFile);
  std::istringstream sizes(four.out.substr(four.out.find("sizes ") + 6));
  std::size_t total = 0, s = 0;
  while (sizes >> s) total += s;
  CHECK(total == 32);
  CHECK(run(ws.with({"cluster", "--k", "4", "--seed", "7", "--workers", "8"})).code == 0);
  CHECK(read_file(ws.dir / cbir::cli::kClusterFile) == dump);

  const auto too_many = run(ws.with({"cluster", "--k", "33"}));
  CHECK(too_many.code != 0);
  CHECK(too_many.err.find("--k") != std::string::npos);
}

TEST_CASE("search engines and their agreement at one generation") {
  Workspace ws("cli_search");
  REQUIRE(run(ws.with({"index"})).code == 0);
  REQUIRE(run(ws.with({"cluster", "--k", "4"})).code == 0);

  const auto classic = run(ws.with({"search", "--engine", "classic", "--query-id", "1", "--top-n", "3"}));
  REQUIRE(classic.code == 0);
  CHECK(classic.out.rfind("rank\tdoc_id\tscore\n1\t", 0) == 0);
  const auto classic_file = read_file(ws.dir / cbir::cli::ranked_file("classic"));
  CHECK(classic_file.rfind("rank,doc_id,score\n", 0) == 0);

  REQUIRE(run(ws.with({"search", "--engine", "hpga", "--query-id", "1", "--generations", "1", "--m", "4"})).code == 0);
  CHECK(read_file(ws.dir / cbir::cli::ranked_file("hpga")) == classic_file);

  REQUIRE(run(ws.with({"search", "--query-id", "2", "--trace", "--generations", "12"})).code == 0);
  const auto hpga_file = read_file(ws.dir / cbir::cli::ranked_file("hpga"));
  const auto trace = read_file(ws.dir / "trace_hpga.csv");
  CHECK(trace.rfind("gen,deme,best_fitness,mean_fitness\n", 0) == 0);
  REQUIRE(run(ws.with({"search", "--query-id", "2", "--trace", "--generations", "12", "--workers", "8"})).code == 0);
  CHECK(read_file(ws.dir / cbir::cli::ranked_file("hpga")) == hpga_file);
  CHECK(read_file(ws.dir / "trace_hpga.csv") == trace);

  CHECK(run(ws.with({"search", "--engine", "ga", "--query-text", "anything at all", "--generations", "3"})).code == 0);

  const auto unknown = run(ws.with({"search", "--engine", "bogus", "--query-id", "1"}));
  CHECK(unknown.code != 0);
  CHECK(run(ws.with({"search", "--query-id", "999"})).code != 0);
  CHECK(run(ws.with({"search", "--generations", "zero", "--query-id", "1"})).code != 0);

  const auto bare = scratch_dir("cli_search_no_clusters");
  REQUIRE(run(ws.with({"index"}, bare)).code == 0);
  const auto missing = run(ws.with({"search", "--query-id", "1"}, bare));
  CHECK(missing.code != 0);
  CHECK(missing.err.find(cbir::cli::kClusterFile.string()) != std::string::npos);
  CHECK(run(ws.with({"search", "--engine", "classic", "--query-id", "1"}, bare)).code == 0);
}

TEST_CASE("single-document collection") {
  const auto dir = scratch_dir("cli_single");
  write_file(dir / "one.all", ".I 5\n.T\nLaser optics\n.W\nBeam shaping with lasers.\n");
  REQUIRE(run({"index", "--docs", (dir / "one.all").string(), "--out", dir.string()}).code == 0);
  const auto r = run({"search", "--engine", "classic", "--query-text", "laser", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(read_file(dir / cbir::cli::ranked_file("classic")).rfind("rank,doc_id,score\n1,5,", 0) == 0);
}

TEST_CASE("eval on the synthetic fixtures") {
  Workspace dup("cli_eval_dup");
  REQUIRE(run(dup.with({"index"})).code == 0);
  REQUIRE(run(dup.with({"cluster", "--k", "4"})).code == 0);
  for (const std::string engine : {"classic", "hpga", "ga"}) {
    CAPTURE(engine);
    const auto r = run(dup.with({"eval", "--engine", engine, "--generations", "5", "--per-query"}));
    REQUIRE(r.code == 0);
    const auto csv = read_file(dup.dir / cbir::cli::eval_file(engine));
    CHECK(csv.rfind("# dataset=collection engine=" + engine + " queries_evaluated=4 queries_skipped=0\n", 0) == 0);
    CHECK(line_starting(csv, "precision,") == "precision,1,1,1,1,1,1,1,1,1,1");
    CHECK(line_starting(csv, "query_1,") == "query_1,1,1,1,1,1,1,1,1,1,1");
  }
  const auto report = read_file(dup.dir / cbir::cli::eval_file("hpga"));
  REQUIRE(run(dup.with({"eval", "--engine", "hpga", "--generations", "5", "--per-query", "--workers", "8"})).code == 0);
  CHECK(read_file(dup.dir / cbir::cli::eval_file("hpga")) == report);

  Workspace disjoint("cli_eval_disjoint", "disjoint");
  REQUIRE(run(disjoint.with({"index"})).code == 0);
  REQUIRE(run(disjoint.with({"eval", "--engine", "classic"})).code == 0);
  CHECK(line_starting(read_file(disjoint.dir / cbir::cli::eval_file("classic")), "precision,") ==
        "precision,0,0,0,0,0,0,0,0,0,0");

  const auto no_qrels = run({"eval", "--engine", "classic", "--docs", (dup.dir / "docs.all").string(), "--queries",
                             (dup.dir / "queries.qry").string(), "--out", dup.dir.string()});
  CHECK(no_qrels.code != 0);
  CHECK(no_qrels.err.find("qrels") != std::string::npos);
}

TEST_CASE("compare") {
  Workspace ws("cli_compare");
  REQUIRE(run(ws.with({"index"})).code == 0);
  REQUIRE(run(ws.with({"cluster", "--k", "4"})).code == 0);
  REQUIRE(run(ws.with({"compare", "--engine", "classic", "--engine-b", "classic"})).code == 0);
  const auto same = read_file(ws.dir / cbir::cli::compare_file("classic", "classic"));
  CHECK(line_starting(same, "improvement_pct,") == "improvement_pct,0,0,0,0,0,0,0,0,0,0");

  REQUIRE(run(ws.with({"compare", "--engine", "hpga", "--engine-b", "classic", "--generations", "4"})).code == 0);
  const auto csv = read_file(ws.dir / cbir::cli::compare_file("hpga", "classic"));
  std::istringstream lines(csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::size_t columns = 1;
    for (char c : line) columns += c == ',';
    CHECK(columns == 11);
  }
  CHECK(rows == 4);

  // Stored rows through the same path.
  const auto dir = scratch_dir("cli_compare_rows");
  write_file(dir / "a.csv", "recall,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,avg\n"
                            "precision,0.9,0.87,0.84,0.77,0.74,0.66,0.58,0.46,0.38,0.6888\n");
  write_file(dir / "b.csv", "recall,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,avg\n"
                            "precision,0.73,0.5,0.44,0.34,0.31,0.24,0.22,0.17,0.15,0.3444\n");
  const auto stored = run({"compare", "--engine", "hpga", "--engine-b", "classic", "--report-a",
                           (dir / "a.csv").string(), "--report-b", (dir / "b.csv").string(), "--out", dir.string()});
  REQUIRE(stored.code == 0);
  CHECK(line_starting(read_file(dir / cbir::cli::compare_file("hpga", "classic")), "improvement_pct,") ==
        "improvement_pct,17,37,40,43,43,42,36,29,23,34.4444");
  const auto broken = run({"compare", "--report-a", (dir / "a.csv").string(), "--report-b",
                           (dir / "missing.csv").string(), "--out", dir.string()});
  CHECK(broken.code != 0);
}

TEST_CASE("config file supplies flags") {
  Workspace ws("cli_config");
  const auto cfg = ws.dir / "run.cfg";
  write_file(cfg, "docs = " + (ws.dir / "docs.all").string() + "\nout = " + ws.dir.string() + "\nk = 2\nseed = 3\n");
  REQUIRE(run({"index", "--config", cfg.string()}).code == 0);
  const auto r = run({"cluster", "--config", cfg.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("into 2 clusters") != std::string::npos);
  const auto overridden = run({"cluster", "--config", cfg.string(), "--k", "3"});
  CHECK(overridden.out.find("into 3 clusters") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
  CHECK(run({"index", "--no-such-flag"}).code != 0);
  CHECK(run({"index", "--workers", "0"}).code != 0);
}

TEST_CASE("the installed binary reports failures through its exit status") {
  const auto dir = scratch_dir("cli_binary");
  const std::string cli = CBIR_CLI_PATH;
  CHECK(std::system((cli + " fixture --out " + dir.string() + " > /dev/null").c_str()) == 0);
  CHECK(std::system((cli + " search --engine nope > /dev/null 2>&1").c_str()) != 0);
  CHECK(std::system((cli + " index --docs " + (dir / "missing").string() + " > /dev/null 2>&1").c_str()) != 0);
}
