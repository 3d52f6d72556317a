#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "cbir/kmeans/kmeans.hpp"

namespace cbir::kmeans {

/// Assignment as read back from a cluster dump.
struct ClusterDump {
  std::size_t k = 0;
  std::size_t iterations_run = 0;
  std::vector<DocId> doc_ids;
  std::vector<std::size_t> assignment;
};

// Text format:
//   # k <k> iterations <n>
//   # cluster <i> size <s>        (one per cluster)
//   <doc-id>\t<cluster-index>     (one per document, input order)
void write_cluster_dump(std::ostream& out, const ClusterSet& clusters);
ClusterDump read_cluster_dump(std::istream& in, const std::string& source = "<stream>");

void save_cluster_dump(const std::filesystem::path& path, const ClusterSet& clusters);
ClusterDump load_cluster_dump(const std::filesystem::path& path);

}  // namespace cbir::kmeans
