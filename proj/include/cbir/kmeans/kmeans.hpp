#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/vsm/term_vector.hpp"

namespace cbir::kmeans {

/// 1 - cosine(p, q).
double cos_distance(const vsm::TermVector& p, const vsm::TermVector& q);

/// A partition of documents into k clusters.
///
/// Clustering works on L2-normalized document vectors; each centroid is the
/// per-term arithmetic mean of its members' normalized vectors. `doc_ids`
/// and `assignment` are parallel to the input order.
struct ClusterSet {
  std::size_t k = 0;
  std::vector<vsm::TermVector> centroids;
  std::vector<DocId> doc_ids;
  std::vector<std::size_t> assignment;
  std::size_t iterations_run = 0;
  /// Sum of cos_distance(doc, own centroid) after each iteration's update step.
  std::vector<double> objective_history;

  /// Positions (into doc_ids) of the members of `cluster`, ascending.
  std::vector<std::size_t> members(std::size_t cluster) const;
  std::vector<std::size_t> sizes() const;

  friend bool operator==(const ClusterSet&, const ClusterSet&) = default;
};

struct KMeansOptions {
  std::size_t k = 10;
  std::uint64_t seed = 0;
  std::size_t max_iter = 100;
  std::size_t workers = 1;
};

/// Spherical k-means over cosine distance.
///
/// Seeds with k distinct documents drawn from `seed`, then alternates
/// nearest-centroid assignment and centroid update until no assignment
/// changes or `max_iter` iterations ran. A cluster that empties is reseeded
/// with the document farthest from its own centroid. On ties a document
/// keeps its current cluster, otherwise the lowest cluster index wins.
///
/// Throws InvalidArgument if k == 0, k > number of documents, max_iter == 0
/// or the spans differ in length.
ClusterSet kmeans_cluster(std::span<const DocId> ids, std::span<const vsm::TermVector> vectors,
                          const KMeansOptions& options);

/// Recomputes centroids for a known assignment (e.g. one read from a dump).
ClusterSet rebuild_clusters(std::span<const DocId> ids, std::span<const vsm::TermVector> vectors,
                            std::size_t k, std::span<const std::size_t> assignment,
                            std::size_t iterations_run);

/// Indices of the m clusters whose centroids are most similar to `query`,
/// by descending cosine with ties to the lower index.
/// Throws InvalidArgument unless 1 <= m <= k.
std::vector<std::size_t> select_relevant_clusters(const ClusterSet& clusters, const vsm::TermVector& query,
                                                  std::size_t m);

}  // namespace cbir::kmeans
