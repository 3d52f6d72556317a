#include "cbir/kmeans/cluster_file.hpp"

#include <fstream>
#include <sstream>

#include "cbir/util/error.hpp"

namespace cbir::kmeans {

void write_cluster_dump(std::ostream& out, const ClusterSet& clusters) {
  out << "# k " << clusters.k << " iterations " << clusters.iterations_run << '\n';
  const auto sizes = clusters.sizes();
  for (std::size_t c = 0; c < clusters.k; ++c) out << "# cluster " << c << " size " << sizes[c] << '\n';
  for (std::size_t i = 0; i < clusters.doc_ids.size(); ++i)
    out << clusters.doc_ids[i] << '\t' << clusters.assignment[i] << '\n';
  if (!out) throw Error("failed writing cluster dump");
}

ClusterDump read_cluster_dump(std::istream& in, const std::string& source) {
  ClusterDump dump;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line[0] == '#') {
      std::string hash, key;
      fields >> hash >> key;
      if (key == "k") {
        std::string iterations_key;
        if (!(fields >> dump.k >> iterations_key >> dump.iterations_run) || iterations_key != "iterations")
          throw ParseError(source, line_no, "malformed cluster dump header");
        have_header = true;
      }
      continue;
    }
    if (!have_header) throw ParseError(source, line_no, "cluster dump is missing its '# k' header");
    long long id = 0;
    long long cluster = 0;
    if (!(fields >> id >> cluster) || id <= 0 || cluster < 0 || static_cast<std::size_t>(cluster) >= dump.k)
      throw ParseError(source, line_no, "expected '<doc-id>\\t<cluster-index>'");
    dump.doc_ids.push_back(static_cast<DocId>(id));
    dump.assignment.push_back(static_cast<std::size_t>(cluster));
  }
  if (!have_header) throw ParseError(source, 0, "cluster dump is missing its '# k' header");
  return dump;
}

void save_cluster_dump(const std::filesystem::path& path, const ClusterSet& clusters) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write cluster dump " + path.string());
  write_cluster_dump(out, clusters);
}

ClusterDump load_cluster_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open cluster dump " + path.string());
  return read_cluster_dump(in, path.string());
}

}  // namespace cbir::kmeans
