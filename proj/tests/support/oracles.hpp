#pragma once

// Test-only reference computations and random inputs. Nothing here calls
// into the library's similarity or ranking code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/vsm/term_vector.hpp"

namespace cbir::testing {

using Dense = std::vector<double>;

inline Dense to_dense(const vsm::TermVector& v, std::size_t dims) {
  Dense d(dims, 0.0);
  for (const auto& e : v.entries()) d.at(e.term) = e.weight;
  return d;
}

inline double dense_cosine(const Dense& p, const Dense& q) {
  double dot = 0.0, pp = 0.0, qq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    dot += p[i] * q[i];
    pp += p[i] * p[i];
    qq += q[i] * q[i];
  }
  if (pp == 0.0 || qq == 0.0) return 0.0;
  return std::min(1.0, dot / (std::sqrt(pp) * std::sqrt(qq)));
}

struct OracleHit {
  DocId doc;
  double score;
};

/// Exhaustive ranking with plain dense arrays: score desc, doc id asc.
inline std::vector<OracleHit> brute_force_ranking(const std::vector<Dense>& docs, const std::vector<DocId>& ids,
                                                  const Dense& query) {
  std::vector<OracleHit> hits;
  for (std::size_t i = 0; i < docs.size(); ++i) hits.push_back({ids[i], dense_cosine(docs[i], query)});
  // Insertion sort: deliberately a different algorithm from the library's.
  for (std::size_t i = 1; i < hits.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const auto& a = hits[j - 1];
      const auto& b = hits[j];
      const bool out_of_order = b.score > a.score || (b.score == a.score && b.doc < a.doc);
      if (!out_of_order) break;
      std::swap(hits[j - 1], hits[j]);
    }
  }
  return hits;
}

/// Random sparse corpus: `n` docs over `dims` terms with small integer tf
/// times a random positive idf-like factor; some docs may be empty and some
/// duplicated to exercise ties.
struct RandomCorpus {
  std::size_t dims = 0;
  std::vector<DocId> ids;
  std::vector<vsm::TermVector> vectors;
  vsm::TermVector query;
};

inline vsm::TermVector random_vector(std::mt19937_64& rng, std::size_t dims, const std::vector<double>& idf,
                                     double density) {
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> tf(1, 4);
  std::vector<vsm::TermVector::Entry> entries;
  for (std::size_t t = 0; t < dims; ++t)
    if (present(rng)) entries.push_back({static_cast<TermId>(t), tf(rng) * idf[t]});
  return vsm::TermVector(std::move(entries));
}

inline RandomCorpus random_corpus(std::uint64_t seed, std::size_t max_docs = 50) {
  std::mt19937_64 rng(seed);
  RandomCorpus c;
  c.dims = std::uniform_int_distribution<std::size_t>(3, 40)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_docs)(rng);
  std::vector<double> idf(c.dims);
  for (auto& w : idf) w = std::log10(std::uniform_real_distribution<double>(1.2, 60.0)(rng));
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  std::vector<DocId> pool(3 * n);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<DocId>(i + 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    c.ids.push_back(pool[i]);
    if (i > 0 && std::bernoulli_distribution(0.1)(rng))
      c.vectors.push_back(c.vectors[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
    else
      c.vectors.push_back(random_vector(rng, c.dims, idf, density));
  }
  c.query = random_vector(rng, c.dims, idf, std::max(density, 0.2));
  return c;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cbir_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace cbir::testing
