#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/corpus/text.hpp"

namespace cbir::corpus {

/// One ".I" record of a SMART-format file with its field texts keyed by
/// marker letter. Text between the ".I" line and the first marker is stored
/// under 'W' (NPL-style records carry no markers at all).
struct SmartRecord {
  DocId id = 0;
  std::size_t line = 0;  ///< line number of the ".I" marker
  std::map<char, std::string> fields;
};

/// Reads all records. `source` names the stream in error messages.
/// Throws ParseError on a malformed ".I" line, on content before the first
/// ".I", and on duplicate ids.
std::vector<SmartRecord> read_smart_records(std::istream& in, const std::string& source);

/// Documents take their token source from ".T" and ".W"; other fields are ignored.
std::vector<Document> parse_smart_docs(const std::filesystem::path& path,
                                       const Analyzer& analyzer = Analyzer{});
std::vector<QueryDoc> parse_smart_queries(const std::filesystem::path& path,
                                          const Analyzer& analyzer = Analyzer{});

}  // namespace cbir::corpus
