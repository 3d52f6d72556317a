#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/vsm/term_vector.hpp"

namespace cbir::vsm {

/// Term dictionary with per-term document frequencies.
///
/// Ids are 0..size()-1 assigned in lexicographic term order, so the same
/// corpus always yields the same ids.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Restores a vocabulary from its parts (used by the index reader).
  /// Throws InvalidArgument if a doc frequency falls outside [1, corpus_size]
  /// or a term repeats.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq, std::size_t corpus_size);

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t corpus_size() const noexcept { return corpus_size_; }

  std::optional<TermId> find(std::string_view term) const;
  const std::string& term(TermId id) const { return terms_.at(id); }
  std::size_t doc_freq(TermId id) const { return doc_freq_.at(id); }

  std::span<const std::string> terms() const noexcept { return terms_; }
  std::span<const std::size_t> doc_freqs() const noexcept { return doc_freq_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.corpus_size_ == b.corpus_size_ && a.terms_ == b.terms_ && a.doc_freq_ == b.doc_freq_;
  }

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> doc_freq_;
  std::unordered_map<std::string, TermId> ids_;
  std::size_t corpus_size_ = 0;
};

/// Throws InvalidArgument on an empty corpus.
Vocabulary build_vocabulary(std::span<const corpus::Document> docs);

}  // namespace cbir::vsm
