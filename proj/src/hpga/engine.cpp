#include "cbir/hpga/engine.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "cbir/hpga/operators.hpp"
#include "cbir/util/error.hpp"
#include "cbir/util/parallel.hpp"
#include "cbir/util/rng.hpp"

namespace cbir::hpga {
namespace {

using ScoreBook = std::unordered_map<DocId, double>;

void record(const Deme& deme, ScoreBook& book) {
  for (const auto& c : deme.chromosomes) {
    const auto [it, inserted] = book.try_emplace(c.provenance, *c.fitness);
    if (!inserted) it->second = std::max(it->second, *c.fitness);
  }
}

GenerationStats summarize(const Deme& deme, std::size_t generation) {
  GenerationStats s;
  s.generation = generation;
  s.deme = deme.index;
  double sum = 0.0;
  for (const auto& c : deme.chromosomes) {
    s.best_fitness = std::max(s.best_fitness, *c.fitness);
    sum += *c.fitness;
  }
  s.mean_fitness = deme.chromosomes.empty() ? 0.0 : sum / static_cast<double>(deme.size());
  return s;
}

}  // namespace

RankedList run_hpga(std::span<const vsm::TermVector> vectors, const kmeans::ClusterSet& clusters,
                    std::span<const std::size_t> selected, const vsm::TermVector& query,
                    const GaConfig& config, DocId query_id, std::vector<GenerationStats>* trace) {
  config.validate();
  auto demes = init_demes(clusters, selected, vectors);

  std::size_t population = 0;
  for (const auto& d : demes) population += d.size();
  const std::size_t generations =
      config.generations == GaConfig::kPopulationSize ? population : config.generations;

  // Split the worker budget between the deme level and the evaluation level.
  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  const std::size_t deme_workers = std::min(workers, demes.size());
  const std::size_t eval_workers = std::max<std::size_t>(1, workers / deme_workers);

  std::vector<ScoreBook> books(demes.size());
  std::vector<GenerationStats> stats(demes.size());

  for (std::size_t g = 0; g < generations; ++g) {
    parallel_for(demes.size(), deme_workers, [&](std::size_t i) {
      evaluate_deme(demes[i], query, eval_workers);
      record(demes[i], books[i]);
      stats[i] = summarize(demes[i], g);
    });
    if (trace) trace->insert(trace->end(), stats.begin(), stats.end());
    if (g + 1 == generations) break;

    // Barrier: every deme is evaluated before individuals move.
    if (g > 0 && g % config.migration_interval == 0) migrate(demes, config);

    parallel_for(demes.size(), deme_workers, [&](std::size_t i) {
      Rng rng(derive_seed(config.seed, {demes[i].index, g}));
      demes[i] = next_generation(demes[i], rng, config);
    });
  }

  ScoreBook merged;
  for (const auto& book : books) {
    for (const auto& [doc, score] : book) {
      const auto [it, inserted] = merged.try_emplace(doc, score);
      if (!inserted) it->second = std::max(it->second, score);
    }
  }
  std::vector<ScoredDoc> scores;
  scores.reserve(merged.size());
  for (const auto& [doc, score] : merged) scores.push_back({doc, score});
  return make_ranked_list(query_id, std::move(scores));
}

void write_trace(std::ostream& out, std::span<const GenerationStats> trace) {
  out << "gen,deme,best_fitness,mean_fitness\n";
  const auto old_precision = out.precision(17);
  for (const auto& s : trace)
    out << s.generation << ',' << s.deme << ',' << s.best_fitness << ',' << s.mean_fitness << '\n';
  out.precision(old_precision);
}

}  // namespace cbir::hpga
