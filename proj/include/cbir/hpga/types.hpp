#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/vsm/term_vector.hpp"

namespace cbir::hpga {

/// One individual: a feature vector plus the document its lineage descends from.
struct Chromosome {
  vsm::TermVector genes;
  DocId provenance = 0;
  std::optional<double> fitness;  ///< cosine(genes, query) once evaluated

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// An island: one subpopulation evolved in isolation between migrations.
struct Deme {
  std::size_t index = 0;
  std::vector<Chromosome> chromosomes;
  std::size_t generation = 0;

  std::size_t size() const noexcept { return chromosomes.size(); }
  /// max(1, ceil(4% of size)) for size >= 2, else 0.
  std::size_t elite_count() const noexcept;

  friend bool operator==(const Deme&, const Deme&) = default;
};

std::size_t elite_count(std::size_t deme_size) noexcept;

/// Positions swapped by crossover are drawn either from the union of the two
/// parents' nonzero terms or from the whole vocabulary.
enum class CrossoverSpace { support_union, vocabulary };

struct GaConfig {
  /// `generations` value meaning "as many generations as initial chromosomes".
  static constexpr std::size_t kPopulationSize = 0;

  std::size_t generations = 50;
  std::size_t migration_interval = 5;
  /// Migrants per ring edge; unset means max(1, ceil(5% of the sending deme)).
  std::optional<std::size_t> migration_count;
  std::uint64_t seed = 0;
  bool mutation_enabled = false;
  double mutation_rate = 0.01;  ///< per-gene probability when mutation is enabled
  CrossoverSpace crossover_space = CrossoverSpace::support_union;
  std::size_t vocabulary_size = 0;  ///< required by CrossoverSpace::vocabulary
  std::size_t workers = 1;

  /// Throws InvalidArgument on out-of-range fields.
  void validate() const;
};

struct ScoredDoc {
  DocId doc = 0;
  double score = 0.0;
  friend bool operator==(const ScoredDoc&, const ScoredDoc&) = default;
};

/// Retrieval result: scores non-increasing, ties by ascending doc id.
struct RankedList {
  DocId query_id = 0;
  std::vector<ScoredDoc> entries;
  friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// Sorts `scores` into ranking order.
RankedList make_ranked_list(DocId query_id, std::vector<ScoredDoc> scores);

/// Per-generation, per-deme fitness summary (the run trace).
struct GenerationStats {
  std::size_t generation = 0;
  std::size_t deme = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

}  // namespace cbir::hpga
