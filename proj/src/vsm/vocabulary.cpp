#include "cbir/vsm/vocabulary.hpp"

#include <map>
#include <set>

#include "cbir/util/error.hpp"

namespace cbir::vsm {

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
                       std::size_t corpus_size)
    : terms_(std::move(terms)), doc_freq_(std::move(doc_freq)), corpus_size_(corpus_size) {
  if (terms_.size() != doc_freq_.size())
    throw InvalidArgument("vocabulary terms and doc frequencies differ in length");
  ids_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (doc_freq_[i] < 1 || doc_freq_[i] > corpus_size_)
      throw InvalidArgument("doc frequency of '" + terms_[i] + "' outside [1, corpus size]");
    if (!ids_.emplace(terms_[i], static_cast<TermId>(i)).second)
      throw InvalidArgument("repeated vocabulary term '" + terms_[i] + "'");
  }
}

std::optional<TermId> Vocabulary::find(std::string_view term) const {
  const auto it = ids_.find(std::string(term));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(std::span<const corpus::Document> docs) {
  if (docs.empty()) throw InvalidArgument("cannot build a vocabulary from an empty corpus");
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    const std::set<std::string> distinct(doc.tokens.begin(), doc.tokens.end());
    for (const auto& term : distinct) ++df[term];
  }
  std::vector<std::string> terms;
  std::vector<std::size_t> freqs;
  terms.reserve(df.size());
  freqs.reserve(df.size());
  for (auto& [term, count] : df) {
    terms.push_back(term);
    freqs.push_back(count);
  }
  return Vocabulary(std::move(terms), std::move(freqs), docs.size());
}

}  // namespace cbir::vsm
