#pragma once

#include <cstddef>
#include <string_view>

#include "cbir/corpus/document.hpp"
#include "cbir/vsm/term_vector.hpp"
#include "cbir/vsm/vocabulary.hpp"

namespace cbir::vsm {

/// Occurrences of `term` in the document's token stream.
std::size_t tf(const corpus::Document& doc, std::string_view term);

/// log10(|D| / df(term)). Throws InvalidArgument for terms not in `vocab`.
double idf(const Vocabulary& vocab, std::string_view term);
double idf(const Vocabulary& vocab, TermId term);

/// tf * idf for every distinct token; terms with idf 0 are left out.
TermVector tfidf_vector(const corpus::Document& doc, const Vocabulary& vocab);

/// Same weighting over the query tokens. Out-of-vocabulary terms are skipped.
TermVector query_vector(const corpus::QueryDoc& query, const Vocabulary& vocab);

/// Cosine similarity; 0 when either vector has zero norm.
double cosine(const TermVector& p, const TermVector& q);

}  // namespace cbir::vsm
