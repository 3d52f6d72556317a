#include "cbir/kmeans/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cbir/util/error.hpp"
#include "cbir/util/parallel.hpp"
#include "cbir/util/rng.hpp"
#include "cbir/vsm/weighting.hpp"

namespace cbir::kmeans {
namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

vsm::TermVector normalized(const vsm::TermVector& v) {
  const double n = v.norm();
  if (n == 0.0) return {};
  std::vector<vsm::TermVector::Entry> entries(v.entries().begin(), v.entries().end());
  for (auto& e : entries) e.weight /= n;
  return vsm::TermVector(std::move(entries));
}

// Dense centroid with cached norm; documents are unit (or zero) vectors, so
// cosine(doc, centroid) reduces to dot / |centroid|.
struct DenseCentroid {
  std::vector<double> weights;
  double norm = 0.0;

  double distance(const vsm::TermVector& unit_doc) const {
    if (norm == 0.0 || unit_doc.empty()) return 1.0;
    double d = 0.0;
    for (const auto& e : unit_doc.entries()) d += e.weight * weights[e.term];
    return 1.0 - std::min(1.0, d / norm);
  }
};

class Clusterer {
 public:
  Clusterer(std::span<const vsm::TermVector> vectors, std::size_t k, std::size_t workers)
      : k_(k), workers_(workers), centroids_(k) {
    docs_.reserve(vectors.size());
    for (const auto& v : vectors) {
      docs_.push_back(normalized(v));
      if (!v.empty()) dims_ = std::max<std::size_t>(dims_, v.entries().back().term + 1);
    }
    for (auto& c : centroids_) c.weights.assign(dims_, 0.0);
    assignment_.assign(docs_.size(), kUnassigned);
    distance_.assign(docs_.size(), 1.0);
  }

  void seed_from(std::span<const std::size_t> positions) {
    for (std::size_t c = 0; c < k_; ++c) set_centroid_to_doc(c, positions[c]);
  }

  void set_assignment(std::span<const std::size_t> assignment) {
    assignment_.assign(assignment.begin(), assignment.end());
  }

  // Returns true if any document changed cluster.
  bool assign() {
    std::vector<char> changed(docs_.size(), 0);
    parallel_for(docs_.size(), workers_, [&](std::size_t i) {
      std::size_t best = kUnassigned;
      double best_d = 0.0;
      for (std::size_t c = 0; c < k_; ++c) {
        const double d = centroids_[c].distance(docs_[i]);
        if (best == kUnassigned || d < best_d) {
          best = c;
          best_d = d;
        }
      }
      const std::size_t current = assignment_[i];
      if (current != kUnassigned && centroids_[current].distance(docs_[i]) == best_d) best = current;
      changed[i] = best != current;
      assignment_[i] = best;
      distance_[i] = best_d;
    });
    return std::any_of(changed.begin(), changed.end(), [](char c) { return c != 0; });
  }

  // Moves the farthest document of a multi-member cluster into each empty one.
  void repair_empty_clusters() {
    auto size = sizes();
    for (std::size_t c = 0; c < k_; ++c) {
      if (size[c] != 0) continue;
      std::size_t farthest = kUnassigned;
      for (std::size_t i = 0; i < docs_.size(); ++i) {
        if (size[assignment_[i]] < 2) continue;
        if (farthest == kUnassigned || distance_[i] > distance_[farthest]) farthest = i;
      }
      if (farthest == kUnassigned) break;  // unreachable while k <= number of documents
      --size[assignment_[farthest]];
      ++size[c];
      assignment_[farthest] = c;
      set_centroid_to_doc(c, farthest);
      distance_[farthest] = centroids_[c].distance(docs_[farthest]);
    }
  }

  void update_centroids() {
    for (auto& c : centroids_) std::fill(c.weights.begin(), c.weights.end(), 0.0);
    const auto size = sizes();
    for (std::size_t i = 0; i < docs_.size(); ++i) {
      auto& w = centroids_[assignment_[i]].weights;
      for (const auto& e : docs_[i].entries()) w[e.term] += e.weight;
    }
    for (std::size_t c = 0; c < k_; ++c) {
      double sq = 0.0;
      if (size[c] > 0) {
        const double inv = static_cast<double>(size[c]);
        for (auto& w : centroids_[c].weights) {
          w /= inv;
          sq += w * w;
        }
      }
      centroids_[c].norm = std::sqrt(sq);
    }
  }

  double objective() const {
    double total = 0.0;
    for (std::size_t i = 0; i < docs_.size(); ++i) total += centroids_[assignment_[i]].distance(docs_[i]);
    return total;
  }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> size(k_, 0);
    for (const auto a : assignment_) ++size[a];
    return size;
  }

  const std::vector<std::size_t>& assignment() const { return assignment_; }

  std::vector<vsm::TermVector> sparse_centroids() const {
    std::vector<vsm::TermVector> out;
    out.reserve(k_);
    for (const auto& c : centroids_) out.push_back(vsm::TermVector::from_dense(c.weights));
    return out;
  }

 private:
  void set_centroid_to_doc(std::size_t c, std::size_t doc) {
    auto& centroid = centroids_[c];
    std::fill(centroid.weights.begin(), centroid.weights.end(), 0.0);
    for (const auto& e : docs_[doc].entries()) centroid.weights[e.term] = e.weight;
    centroid.norm = docs_[doc].norm();
  }

  std::size_t k_;
  std::size_t workers_;
  std::size_t dims_ = 0;
  std::vector<vsm::TermVector> docs_;
  std::vector<DenseCentroid> centroids_;
  std::vector<std::size_t> assignment_;
  std::vector<double> distance_;
};

void check_inputs(std::span<const DocId> ids, std::span<const vsm::TermVector> vectors, std::size_t k) {
  if (ids.size() != vectors.size()) throw InvalidArgument("document ids and vectors differ in length");
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (k > vectors.size())
    throw InvalidArgument("k = " + std::to_string(k) + " exceeds the number of documents (" +
                          std::to_string(vectors.size()) + ")");
}

}  // namespace

double cos_distance(const vsm::TermVector& p, const vsm::TermVector& q) { return 1.0 - vsm::cosine(p, q); }

std::vector<std::size_t> ClusterSet::members(std::size_t cluster) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] == cluster) out.push_back(i);
  return out;
}

std::vector<std::size_t> ClusterSet::sizes() const {
  std::vector<std::size_t> size(k, 0);
  for (const auto a : assignment) ++size[a];
  return size;
}

ClusterSet kmeans_cluster(std::span<const DocId> ids, std::span<const vsm::TermVector> vectors,
                          const KMeansOptions& options) {
  check_inputs(ids, vectors, options.k);
  if (options.max_iter == 0) throw InvalidArgument("max_iter must be at least 1");

  // k distinct documents by partial Fisher-Yates.
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(options.seed, {0x6b6d65616e73ULL}));
  for (std::size_t i = 0; i < options.k; ++i) {
    const auto j = i + rng.uniform_index(order.size() - i);
    std::swap(order[i], order[j]);
  }

  Clusterer clusterer(vectors, options.k, options.workers);
  clusterer.seed_from(std::span(order).first(options.k));

  ClusterSet result;
  result.k = options.k;
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    const bool changed = clusterer.assign();
    clusterer.repair_empty_clusters();
    clusterer.update_centroids();
    result.iterations_run = iter;
    result.objective_history.push_back(clusterer.objective());
    if (!changed) break;
  }

  result.centroids = clusterer.sparse_centroids();
  result.doc_ids.assign(ids.begin(), ids.end());
  result.assignment = clusterer.assignment();
  return result;
}

ClusterSet rebuild_clusters(std::span<const DocId> ids, std::span<const vsm::TermVector> vectors,
                            std::size_t k, std::span<const std::size_t> assignment,
                            std::size_t iterations_run) {
  check_inputs(ids, vectors, k);
  if (assignment.size() != ids.size()) throw InvalidArgument("assignment does not cover every document");
  for (const auto a : assignment)
    if (a >= k) throw InvalidArgument("cluster index out of range in assignment");

  Clusterer clusterer(vectors, k, 1);
  clusterer.set_assignment(assignment);
  clusterer.update_centroids();

  ClusterSet result;
  result.k = k;
  result.iterations_run = iterations_run;
  result.objective_history.push_back(clusterer.objective());
  result.centroids = clusterer.sparse_centroids();
  result.doc_ids.assign(ids.begin(), ids.end());
  result.assignment.assign(assignment.begin(), assignment.end());
  return result;
}

std::vector<std::size_t> select_relevant_clusters(const ClusterSet& clusters, const vsm::TermVector& query,
                                                  std::size_t m) {
  if (m < 1 || m > clusters.k)
    throw InvalidArgument("m = " + std::to_string(m) + " must lie in [1, " + std::to_string(clusters.k) + "]");
  std::vector<double> score(clusters.k);
  for (std::size_t c = 0; c < clusters.k; ++c) score[c] = vsm::cosine(clusters.centroids[c], query);
  std::vector<std::size_t> order(clusters.k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  order.resize(m);
  return order;
}

}  // namespace cbir::kmeans
