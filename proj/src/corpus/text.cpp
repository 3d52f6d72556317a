#include "cbir/corpus/text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cbir/corpus/porter.hpp"
#include "cbir/util/error.hpp"

namespace cbir::corpus {
namespace {

bool is_alnum(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char to_lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= options.min_length && !(options.drop_numeric && all_digits(current)))
      tokens.push_back(current);
    current.clear();
  };
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_alnum(c)) {
      current.push_back(to_lower(c));
    } else if (!current.empty()) {
      flush();
    }
  }
  if (!current.empty()) flush();
  return tokens;
}

StopList StopList::parse(std::string_view text, std::string source) {
  StopList list;
  list.source_ = std::move(source);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      std::string word(line);
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char c) { return to_lower(c); });
      list.words_.insert(std::move(word));
    }
    pos = end + 1;
  }
  return list;
}

StopList StopList::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open stoplist " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

const StopList& StopList::standard() {
  static const StopList list = parse(default_stoplist_text(), "stopwords_en");
  return list;
}

bool StopList::contains(std::string_view word) const {
  std::string lowered(word);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return to_lower(c); });
  return words_.contains(lowered);
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens, const StopList& stoplist) {
  std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
  return tokens;
}

Analyzer::Analyzer() : Analyzer(StopList::standard()) {}

Analyzer::Analyzer(StopList stoplist, TokenizerOptions options)
    : stoplist_(std::move(stoplist)), options_(options) {}

std::vector<std::string> Analyzer::analyze(std::string_view text) const {
  auto tokens = remove_stopwords(tokenize(text, options_), stoplist_);
  std::vector<std::string> terms;
  terms.reserve(tokens.size());
  for (const auto& token : tokens) {
    auto stem = porter_stem(token);
    if (!stem.empty() && !stoplist_.contains(stem)) terms.push_back(std::move(stem));
  }
  return terms;
}

}  // namespace cbir::corpus
