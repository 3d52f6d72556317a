#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace cbir::cli {

/// Synthetic collections for tests and smoke runs, written in SMART format
/// as docs.all, queries.qry and qrels.rel.
///
///  - duplicates: each query's relevant documents repeat the query text
///    verbatim, so their vectors equal the query vector.
///  - disjoint: qrels name only document ids that are not in the collection.
///  - separated: two topics with no shared terms; queries target one topic.
struct FixtureSpec {
  std::string kind = "duplicates";
  std::size_t topics = 4;
  std::size_t docs_per_topic = 8;
  std::size_t relevant_per_query = 3;
  std::uint64_t seed = 1;
};

void write_fixture(const std::filesystem::path& dir, const FixtureSpec& spec);

inline const std::filesystem::path kFixtureDocs = "docs.all";
inline const std::filesystem::path kFixtureQueries = "queries.qry";
inline const std::filesystem::path kFixtureQrels = "qrels.rel";

}  // namespace cbir::cli
