#include "cbir/evalkit/qrels.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cbir/util/error.hpp"

namespace cbir::evalkit {
namespace {

DocId parse_positive(const std::string& field, const std::string& source, std::size_t line_no) {
  DocId value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || value == 0)
    throw ParseError(source, line_no, "expected a positive integer id, got '" + field + "'");
  return value;
}

}  // namespace

const std::set<DocId>& Qrels::relevant(DocId query) const {
  static const std::set<DocId> kNone;
  const auto it = judgments.find(query);
  return it == judgments.end() ? kNone : it->second;
}

Qrels read_qrels(std::istream& in, const std::string& source) {
  Qrels qrels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string query, doc;
    if (!(fields >> query)) continue;
    if (!(fields >> doc)) throw ParseError(source, line_no, "expected 'query-id doc-id'");
    qrels.judgments[parse_positive(query, source, line_no)].insert(parse_positive(doc, source, line_no));
  }
  return qrels;
}

Qrels load_qrels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open qrels " + path.string());
  return read_qrels(in, path.string());
}

}  // namespace cbir::evalkit
