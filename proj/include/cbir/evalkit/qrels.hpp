#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <set>

#include "cbir/corpus/document.hpp"

namespace cbir::evalkit {

/// Relevance judgments: query id -> relevant document ids.
struct Qrels {
  std::map<DocId, std::set<DocId>> judgments;

  /// Empty set for unjudged queries.
  const std::set<DocId>& relevant(DocId query) const;
};

/// Lines "query-id doc-id [ignored columns]", whitespace separated. Blank
/// lines are skipped. Throws ParseError (with line number) on non-integer
/// or non-positive ids.
Qrels read_qrels(std::istream& in, const std::string& source = "<stream>");
Qrels load_qrels(const std::filesystem::path& path);

}  // namespace cbir::evalkit
