#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/vsm/term_vector.hpp"
#include "cbir/vsm/vocabulary.hpp"

namespace cbir::vsm {

/// Vocabulary plus the TF-IDF vector of every document, in collection order.
struct Index {
  Vocabulary vocab;
  std::vector<DocId> doc_ids;
  std::vector<TermVector> vectors;

  friend bool operator==(const Index&, const Index&) = default;
};

Index build_index(std::span<const corpus::Document> docs, std::size_t workers = 1);

inline constexpr std::uint32_t kIndexFormatVersion = 1;

// Binary layout, little-endian:
//   magic "CBIRIDX\0", u32 version, u64 corpus_size, u64 vocab_size
//   vocab_size x { u32 term_len, term bytes, u32 id, u64 doc_freq }
//   u64 doc_count
//   doc_count x { u32 doc_id, u64 entries, entries x { u32 term_id, f64 weight } }
void write_index(std::ostream& out, const Index& index);
Index read_index(std::istream& in, const std::string& source = "<stream>");

void save_index(const std::filesystem::path& path, const Index& index);
Index load_index(const std::filesystem::path& path);

}  // namespace cbir::vsm
