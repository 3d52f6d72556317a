#pragma once

#include <span>

#include "cbir/hpga/types.hpp"

namespace cbir::evalkit {

/// Exhaustive vector-space ranking: every document scored by cosine with
/// the query, highest first, ties by ascending doc id.
hpga::RankedList classic_ir_rank(const vsm::TermVector& query, std::span<const DocId> ids,
                                 std::span<const vsm::TermVector> vectors, DocId query_id = 0);

/// Single-population GA retrieval: the HPGA engine with one deme holding
/// the whole corpus, so no clustering and no migration.
hpga::RankedList ga_ir_rank(const vsm::TermVector& query, std::span<const DocId> ids,
                            std::span<const vsm::TermVector> vectors, const hpga::GaConfig& config,
                            DocId query_id = 0);

}  // namespace cbir::evalkit
