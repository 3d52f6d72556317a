#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cbir::corpus {

struct TokenizerOptions {
  std::size_t min_length = 2;  ///< shorter tokens are dropped
  bool drop_numeric = true;    ///< drop tokens made only of digits
};

/// Splits `text` into lowercased maximal runs of ASCII letters and digits.
/// Every other byte (punctuation, whitespace, non-ASCII) separates tokens.
std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options = {});

/// A set of lowercase words excluded from indexing.
class StopList {
 public:
  StopList() = default;

  /// Parses one word per line; blank lines and text after '#' are ignored.
  static StopList parse(std::string_view text, std::string source);
  static StopList load(const std::filesystem::path& path);
  /// The list shipped in data/stopwords_en.txt.
  static const StopList& standard();

  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }
  const std::string& source() const noexcept { return source_; }

 private:
  std::unordered_set<std::string> words_;
  std::string source_;
};

/// Order-preserving filter removing every stoplist member.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens, const StopList& stoplist);

/// Text normalization pipeline: tokenize, drop stopwords, Porter-stem.
///
/// Stems that collide with a stopword (e.g. "ones" -> "on") are dropped as
/// well, so no emitted term is ever a stoplist member.
class Analyzer {
 public:
  Analyzer();
  explicit Analyzer(StopList stoplist, TokenizerOptions options = {});

  std::vector<std::string> analyze(std::string_view text) const;

  const StopList& stoplist() const noexcept { return stoplist_; }
  const TokenizerOptions& options() const noexcept { return options_; }

 private:
  StopList stoplist_;
  TokenizerOptions options_;
};

/// Raw contents of the shipped stopword file (compiled in).
std::string_view default_stoplist_text();

}  // namespace cbir::corpus
