#include "cbir/corpus/smart.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

#include "cbir/util/error.hpp"

namespace cbir::corpus {
namespace {

// A field marker is a line of the form ".X" or ".X <rest>" with X uppercase.
bool is_marker(std::string_view line) {
  return line.size() >= 2 && line[0] == '.' && line[1] >= 'A' && line[1] <= 'Z' &&
         (line.size() == 2 || line[2] == ' ' || line[2] == '\t' || line[2] == '\r');
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

DocId parse_id(std::string_view line, const std::string& source, std::size_t line_no) {
  auto rest = line.substr(2);
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.remove_suffix(1);
  DocId id = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), id);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size() || id == 0)
    throw ParseError(source, line_no, "malformed .I line, expected a positive integer id");
  return id;
}

void append_line(std::string& field, std::string_view line) {
  if (!field.empty()) field.push_back('\n');
  field.append(line);
}

}  // namespace

std::vector<SmartRecord> read_smart_records(std::istream& in, const std::string& source) {
  std::vector<SmartRecord> records;
  std::unordered_set<DocId> seen;
  char field = 'W';
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_cr(raw);
    if (is_marker(line)) {
      if (line[1] == 'I') {
        const DocId id = parse_id(line, source, line_no);
        if (!seen.insert(id).second)
          throw ParseError(source, line_no, "duplicate record id " + std::to_string(id));
        records.push_back(SmartRecord{id, line_no, {}});
        field = 'W';
        continue;
      }
      if (records.empty()) throw ParseError(source, line_no, "field marker before the first .I record");
      field = line[1];
      auto rest = line.substr(2);
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      if (!rest.empty()) append_line(records.back().fields[field], rest);
      continue;
    }
    if (records.empty()) {
      if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
      throw ParseError(source, line_no, "expected .I record marker");
    }
    append_line(records.back().fields[field], line);
  }
  return records;
}

namespace {

std::vector<SmartRecord> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_smart_records(in, path.string());
}

std::string field_or_empty(const SmartRecord& r, char key) {
  const auto it = r.fields.find(key);
  return it == r.fields.end() ? std::string{} : it->second;
}

}  // namespace

std::vector<Document> parse_smart_docs(const std::filesystem::path& path, const Analyzer& analyzer) {
  std::vector<Document> docs;
  for (auto& record : read_file(path)) {
    Document doc;
    doc.id = record.id;
    doc.title = field_or_empty(record, 'T');
    doc.body = field_or_empty(record, 'W');
    doc.tokens = analyzer.analyze(doc.title + "\n" + doc.body);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<QueryDoc> parse_smart_queries(const std::filesystem::path& path, const Analyzer& analyzer) {
  std::vector<QueryDoc> queries;
  for (auto& record : read_file(path)) {
    QueryDoc query;
    query.id = record.id;
    query.text = field_or_empty(record, 'W');
    if (query.text.empty()) query.text = field_or_empty(record, 'T');
    query.tokens = analyzer.analyze(query.text);
    queries.push_back(std::move(query));
  }
  return queries;
}

}  // namespace cbir::corpus
