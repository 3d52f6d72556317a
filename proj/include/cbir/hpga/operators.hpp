#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cbir/hpga/types.hpp"
#include "cbir/kmeans/kmeans.hpp"
#include "cbir/util/rng.hpp"

namespace cbir::hpga {

/// One deme per selected cluster; every member document becomes a
/// chromosome carrying its own vector and id. `vectors` is parallel to
/// `clusters.doc_ids`. Throws InvalidArgument on an empty selection, an
/// out-of-range index or an empty selected cluster.
std::vector<Deme> init_demes(const kmeans::ClusterSet& clusters, std::span<const std::size_t> selected,
                             std::span<const vsm::TermVector> vectors);

/// Sets every fitness to cosine(genes, query). Chromosomes are independent,
/// so they are evaluated on up to `workers` threads.
void evaluate_deme(Deme& deme, const vsm::TermVector& query, std::size_t workers = 1);

/// fitness / total fitness; uniform when the total is 0.
std::vector<double> fitness_probabilities(const Deme& deme);

/// The elite_count() fittest chromosomes, best first (ties to lower provenance).
std::vector<Chromosome> take_elite(const Deme& deme);

/// Indices of two parents chosen by hybrid roulette-tournament selection.
///
/// Each parent is drawn independently: a pool size r is drawn uniformly
/// from [1, |deme|], the pool is filled with r fitness-proportional roulette
/// draws (with replacement; uniform when all fitness is 0), and the fittest
/// pool member wins, the earliest draw on ties. The two parents may coincide.
/// Throws InvalidArgument if the deme has fewer than two chromosomes.
std::pair<std::size_t, std::size_t> hrts_select(const Deme& deme, Rng& rng);

/// Children of p1 and p2 with the genes at term positions u and v swapped.
/// Each child inherits the provenance of the fitter parent (p1 on ties) and
/// has no fitness.
std::pair<Chromosome, Chromosome> exchange_positions(const Chromosome& p1, const Chromosome& p2, TermId u,
                                                     TermId v);

/// exchange_positions at two distinct positions drawn from the configured
/// crossover space. When the space holds a single position it is swapped
/// alone; an empty space yields unevaluated copies of the parents.
std::pair<Chromosome, Chromosome> crossover_two_positions(const Chromosome& p1, const Chromosome& p2, Rng& rng,
                                                          CrossoverSpace space = CrossoverSpace::support_union,
                                                          std::size_t vocabulary_size = 0);

/// Elites followed by crossover offspring until the deme is full again.
/// Demes smaller than two only advance their generation counter.
Deme next_generation(const Deme& deme, Rng& rng, const GaConfig& config);

/// Number of migrants deme `sender` sends to `receiver` under `config`.
std::size_t migration_count(const GaConfig& config, std::size_t sender_size, std::size_t receiver_size);

/// Synchronous ring migration: deme i sends copies of its fittest
/// chromosomes to deme (i+1) mod D, replacing that deme's least fit. All
/// emigrants are chosen from the pre-migration state. A single deme is
/// left untouched; every chromosome must be evaluated.
void migrate(std::vector<Deme>& demes, const GaConfig& config);

}  // namespace cbir::hpga
