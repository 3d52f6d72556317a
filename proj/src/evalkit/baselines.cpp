#include "cbir/evalkit/baselines.hpp"

#include <array>

#include "cbir/hpga/engine.hpp"
#include "cbir/util/error.hpp"
#include "cbir/vsm/weighting.hpp"

namespace cbir::evalkit {

hpga::RankedList classic_ir_rank(const vsm::TermVector& query, std::span<const DocId> ids,
                                 std::span<const vsm::TermVector> vectors, DocId query_id) {
  if (ids.size() != vectors.size()) throw InvalidArgument("document ids and vectors differ in length");
  std::vector<hpga::ScoredDoc> scores;
  scores.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) scores.push_back({ids[i], vsm::cosine(vectors[i], query)});
  return hpga::make_ranked_list(query_id, std::move(scores));
}

hpga::RankedList ga_ir_rank(const vsm::TermVector& query, std::span<const DocId> ids,
                            std::span<const vsm::TermVector> vectors, const hpga::GaConfig& config,
                            DocId query_id) {
  if (ids.size() != vectors.size()) throw InvalidArgument("document ids and vectors differ in length");
  kmeans::ClusterSet single;
  single.k = 1;
  single.centroids.resize(1);
  single.doc_ids.assign(ids.begin(), ids.end());
  single.assignment.assign(ids.size(), 0);
  constexpr std::array<std::size_t, 1> kOnlyCluster{0};
  return hpga::run_hpga(vectors, single, kOnlyCluster, query, config, query_id);
}

}  // namespace cbir::evalkit
