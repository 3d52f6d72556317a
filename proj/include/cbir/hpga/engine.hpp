#pragma once

#include <span>
#include <vector>

#include "cbir/hpga/types.hpp"
#include "cbir/kmeans/kmeans.hpp"

namespace cbir::hpga {

/// Runs the two-level parallel GA over the selected clusters.
///
/// Each generation evaluates every deme (demes in parallel, and chromosomes
/// within a deme in parallel), records for each provenance document the best
/// fitness seen so far, migrates every `migration_interval` generations and
/// breeds the next generation. The returned ranking covers every document of
/// the selected clusters, scored by the best fitness in its lineage.
///
/// `vectors` is parallel to `clusters.doc_ids`. Output depends only on the
/// inputs and `config.seed`, never on `config.workers`.
RankedList run_hpga(std::span<const vsm::TermVector> vectors, const kmeans::ClusterSet& clusters,
                    std::span<const std::size_t> selected, const vsm::TermVector& query,
                    const GaConfig& config, DocId query_id = 0,
                    std::vector<GenerationStats>* trace = nullptr);

/// "gen,deme,best_fitness,mean_fitness" lines.
void write_trace(std::ostream& out, std::span<const GenerationStats> trace);

}  // namespace cbir::hpga
