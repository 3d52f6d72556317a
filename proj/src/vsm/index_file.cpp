#include "cbir/vsm/index_file.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "cbir/util/error.hpp"
#include "cbir/util/parallel.hpp"
#include "cbir/vsm/weighting.hpp"

namespace cbir::vsm {
namespace {

constexpr std::array<char, 8> kMagic{'C', 'B', 'I', 'R', 'I', 'D', 'X', '\0'};

template <typename T>
void put(std::ostream& out, T value) {
  static_assert(std::is_unsigned_v<T>);
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

void put_f64(std::ostream& out, double value) { put(out, std::bit_cast<std::uint64_t>(value)); }

class Reader {
 public:
  Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  template <typename T>
  T get() {
    std::array<unsigned char, sizeof(T)> bytes{};
    in_.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (in_.gcount() != static_cast<std::streamsize>(bytes.size())) fail("truncated index file");
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
    return value;
  }

  double get_f64() { return std::bit_cast<double>(get<std::uint64_t>()); }

  std::string get_string(std::size_t len) {
    std::string s(len, '\0');
    in_.read(s.data(), static_cast<std::streamsize>(len));
    if (in_.gcount() != static_cast<std::streamsize>(len)) fail("truncated index file");
    return s;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, 0, what); }

 private:
  std::istream& in_;
  std::string source_;
};

}  // namespace

Index build_index(std::span<const corpus::Document> docs, std::size_t workers) {
  Index index;
  index.vocab = build_vocabulary(docs);
  index.doc_ids.reserve(docs.size());
  for (const auto& doc : docs) index.doc_ids.push_back(doc.id);
  index.vectors.resize(docs.size());
  parallel_for(docs.size(), workers,
               [&](std::size_t i) { index.vectors[i] = tfidf_vector(docs[i], index.vocab); });
  return index;
}

void write_index(std::ostream& out, const Index& index) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kIndexFormatVersion);
  put<std::uint64_t>(out, index.vocab.corpus_size());
  put<std::uint64_t>(out, index.vocab.size());
  for (std::size_t id = 0; id < index.vocab.size(); ++id) {
    const auto& term = index.vocab.term(static_cast<TermId>(id));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(term.size()));
    out.write(term.data(), static_cast<std::streamsize>(term.size()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(id));
    put<std::uint64_t>(out, index.vocab.doc_freq(static_cast<TermId>(id)));
  }
  put<std::uint64_t>(out, index.doc_ids.size());
  for (std::size_t d = 0; d < index.doc_ids.size(); ++d) {
    put<std::uint32_t>(out, index.doc_ids[d]);
    const auto entries = index.vectors[d].entries();
    put<std::uint64_t>(out, entries.size());
    for (const auto& e : entries) {
      put<std::uint32_t>(out, e.term);
      put_f64(out, e.weight);
    }
  }
  if (!out) throw Error("failed writing index");
}

Index read_index(std::istream& in, const std::string& source) {
  Reader r(in, source);
  if (r.get_string(kMagic.size()) != std::string(kMagic.data(), kMagic.size()))
    r.fail("not an index file (bad magic)");
  if (const auto version = r.get<std::uint32_t>(); version != kIndexFormatVersion)
    r.fail("unsupported index format version " + std::to_string(version));
  const auto corpus_size = r.get<std::uint64_t>();
  const auto vocab_size = r.get<std::uint64_t>();

  std::vector<std::string> terms(vocab_size);
  std::vector<std::size_t> freqs(vocab_size);
  for (std::uint64_t i = 0; i < vocab_size; ++i) {
    auto term = r.get_string(r.get<std::uint32_t>());
    const auto id = r.get<std::uint32_t>();
    if (id != i) r.fail("term ids are not dense and ordered");
    terms[i] = std::move(term);
    freqs[i] = r.get<std::uint64_t>();
  }

  Index index;
  try {
    index.vocab = Vocabulary(std::move(terms), std::move(freqs), corpus_size);
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }

  const auto doc_count = r.get<std::uint64_t>();
  if (doc_count != corpus_size) r.fail("document count does not match corpus size");
  index.doc_ids.reserve(doc_count);
  index.vectors.reserve(doc_count);
  for (std::uint64_t d = 0; d < doc_count; ++d) {
    index.doc_ids.push_back(r.get<std::uint32_t>());
    const auto n = r.get<std::uint64_t>();
    std::vector<TermVector::Entry> entries;
    entries.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      const auto term = r.get<std::uint32_t>();
      if (term >= vocab_size) r.fail("term id out of range in document vector");
      entries.push_back({term, r.get_f64()});
    }
    try {
      index.vectors.emplace_back(std::move(entries));
    } catch (const InvalidArgument& e) {
      r.fail(e.what());
    }
  }
  return index;
}

void save_index(const std::filesystem::path& path, const Index& index) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write index " + path.string());
  write_index(out, index);
}

Index load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index " + path.string());
  return read_index(in, path.string());
}

}  // namespace cbir::vsm
