#include "cbir/vsm/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cbir/util/error.hpp"

namespace cbir::vsm {
namespace {

TermVector weigh(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  std::map<TermId, std::size_t> counts;
  for (const auto& token : tokens)
    if (const auto id = vocab.find(token)) ++counts[*id];
  std::vector<TermVector::Entry> entries;
  entries.reserve(counts.size());
  for (const auto [id, count] : counts) {
    const double w = static_cast<double>(count) * idf(vocab, id);
    if (w > 0.0) entries.push_back({id, w});
  }
  return TermVector(std::move(entries));
}

}  // namespace

std::size_t tf(const corpus::Document& doc, std::string_view term) {
  return static_cast<std::size_t>(std::count(doc.tokens.begin(), doc.tokens.end(), term));
}

double idf(const Vocabulary& vocab, TermId term) {
  if (term >= vocab.size()) throw InvalidArgument("term id out of vocabulary range");
  return std::log10(static_cast<double>(vocab.corpus_size()) /
                    static_cast<double>(vocab.doc_freq(term)));
}

double idf(const Vocabulary& vocab, std::string_view term) {
  const auto id = vocab.find(term);
  if (!id) throw InvalidArgument("term '" + std::string(term) + "' is not in the vocabulary");
  return idf(vocab, *id);
}

TermVector tfidf_vector(const corpus::Document& doc, const Vocabulary& vocab) {
  return weigh(doc.tokens, vocab);
}

TermVector query_vector(const corpus::QueryDoc& query, const Vocabulary& vocab) {
  return weigh(query.tokens, vocab);
}

double cosine(const TermVector& p, const TermVector& q) {
  const double np = p.squared_norm();
  const double nq = q.squared_norm();
  if (np == 0.0 || nq == 0.0) return 0.0;
  return std::min(1.0, dot(p, q) / (std::sqrt(np) * std::sqrt(nq)));
}

}  // namespace cbir::vsm
