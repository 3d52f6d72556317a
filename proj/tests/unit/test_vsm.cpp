#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "cbir/util/error.hpp"
#include "cbir/vsm/index_file.hpp"
#include "cbir/vsm/vocabulary.hpp"
#include "cbir/vsm/weighting.hpp"
#include "support/oracles.hpp"

using namespace cbir;
using namespace cbir::vsm;
using corpus::Document;
using corpus::QueryDoc;

namespace {

Document doc(DocId id, std::vector<std::string> tokens) { return Document{id, "", "", std::move(tokens)}; }

// Four documents; "laser" occurs in docs 1 and 3, "beam" in all four.
std::vector<Document> laser_corpus() {
  return {doc(1, {"laser", "beam", "laser"}), doc(2, {"beam", "optic"}), doc(3, {"laser", "beam"}),
          doc(4, {"beam", "prism", "prism"})};
}

}  // namespace

TEST_CASE("build_vocabulary counts document frequencies") {
  const auto docs = laser_corpus();
  const auto vocab = build_vocabulary(docs);
  CHECK(vocab.corpus_size() == 4);
  CHECK(vocab.size() == 4);
  CHECK(vocab.doc_freq(*vocab.find("laser")) == 2);
  CHECK(vocab.doc_freq(*vocab.find("beam")) == 4);
  CHECK(vocab.doc_freq(*vocab.find("prism")) == 1);
  CHECK_FALSE(vocab.find("absent"));
  // Dense ids in lexicographic order.
  CHECK(vocab.term(0) == "beam");
  CHECK(vocab.term(3) == "prism");

  const std::vector<Document> single{doc(9, {"a1", "b2", "a1"})};
  const auto one = build_vocabulary(single);
  for (TermId t = 0; t < one.size(); ++t) CHECK(one.doc_freq(t) == 1);

  CHECK_THROWS_AS(build_vocabulary(std::vector<Document>{}), InvalidArgument);
  CHECK_THROWS_AS(Vocabulary({"x"}, {3}, 2), InvalidArgument);
  CHECK_THROWS_AS(Vocabulary({"x"}, {0}, 2), InvalidArgument);
}

TEST_CASE("tf counts occurrences") {
  const auto d = doc(1, {"a", "b", "a"});
  CHECK(tf(d, "a") == 2);
  CHECK(tf(d, "z") == 0);
  CHECK(tf(doc(2, {"a", "a", "a", "a"}), "a") == 4);
}

TEST_CASE("idf is base-10 log of |D| / df") {
  std::vector<std::string> terms{"common", "rare", "ten"};
  const Vocabulary v100(terms, {100, 1, 10}, 100);
  CHECK(idf(v100, "common") == 0.0);
  CHECK(idf(v100, "ten") == doctest::Approx(1.0).epsilon(1e-12));
  const auto vocab = build_vocabulary(laser_corpus());
  CHECK(std::fabs(idf(vocab, "laser") - 0.30102999566398120) < 1e-9);
  CHECK(idf(vocab, "beam") == 0.0);
  CHECK_THROWS_AS(idf(vocab, "unknown"), InvalidArgument);
}

TEST_CASE("tfidf_vector weights and omissions") {
  const auto docs = laser_corpus();
  const auto vocab = build_vocabulary(docs);
  const auto v1 = tfidf_vector(docs[0], vocab);
  // tf 2, df 2 of 4: 2 * log10(2).
  CHECK(std::fabs(v1.weight(*vocab.find("laser")) - 2 * std::log10(2.0)) < 1e-12);
  // "beam" is in every document: never stored.
  for (const auto& d : docs) CHECK(tfidf_vector(d, vocab).weight(*vocab.find("beam")) == 0.0);
  const auto v4 = tfidf_vector(docs[3], vocab);
  CHECK(std::fabs(v4.weight(*vocab.find("prism")) - 1.2041199826559248) < 1e-9);
  CHECK(tfidf_vector(doc(5, {}), vocab).empty());
  for (const auto& d : docs) {
    const auto v = tfidf_vector(d, vocab);
    for (const auto& e : v.entries()) CHECK(e.weight > 0.0);
  }
}

TEST_CASE("query_vector") {
  const auto vocab = build_vocabulary(laser_corpus());
  const auto q = query_vector(QueryDoc{1, "", {"laser", "laser", "unknownterm"}}, vocab);
  CHECK(q.size() == 1);
  CHECK(std::fabs(q.weight(*vocab.find("laser")) - 2 * std::log10(2.0)) < 1e-12);
  CHECK(query_vector(QueryDoc{2, "", {"zzz", "yyy"}}, vocab).empty());
  const auto both = query_vector(QueryDoc{3, "", {"laser", "prism"}}, vocab);
  CHECK(both.size() == 2);

  // tf=2 with idf log10(4): weight 2*log10(4).
  const Vocabulary four({"laser"}, {1}, 4);
  CHECK(std::fabs(query_vector(QueryDoc{4, "", {"laser", "laser"}}, four).weight(0) - 1.2041199826559248) < 1e-9);
}

TEST_CASE("cosine examples") {
  const TermVector p{{0, 1.0}, {1, 2.0}};
  const TermVector q{{0, 2.0}, {1, 1.0}};
  CHECK(std::fabs(cosine(p, q) - 0.8) < 1e-12);
  CHECK(std::fabs(cosine(p, p) - 1.0) < 1e-12);
  CHECK(cosine(TermVector{{0, 1.0}}, TermVector{{1, 3.0}}) == 0.0);
  CHECK(cosine(p, TermVector{}) == 0.0);
  CHECK(cosine(TermVector{}, TermVector{}) == 0.0);
}

TEST_CASE("cosine properties on random sparse vectors") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto c = testing::random_corpus(seed, 6);
    for (const auto& p : c.vectors) {
      const double pq = cosine(p, c.query);
      CHECK(pq >= 0.0);
      CHECK(pq <= 1.0);
      CHECK(pq == cosine(c.query, p));
      CHECK(std::fabs(pq - testing::dense_cosine(testing::to_dense(p, c.dims), testing::to_dense(c.query, c.dims))) <
            1e-12);
      std::vector<TermVector::Entry> scaled(p.entries().begin(), p.entries().end());
      for (auto& e : scaled) e.weight *= 3.7;
      CHECK(std::fabs(cosine(TermVector(scaled), c.query) - pq) < 1e-12);
    }
  }
}

TEST_CASE("single-term query ranking is invariant to the logarithm base") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dims = 8;
    std::vector<double> df(dims);
    for (auto& d : df) d = 1 + static_cast<double>(rng() % 20);
    std::vector<std::vector<int>> tfs(15, std::vector<int>(dims));
    for (auto& row : tfs)
      for (auto& t : row) t = static_cast<int>(rng() % 3);
    auto vectors_with = [&](double (*log_fn)(double)) {
      std::vector<TermVector> out;
      for (const auto& row : tfs) {
        std::vector<TermVector::Entry> e;
        for (std::size_t t = 0; t < dims; ++t)
          if (row[t] > 0) e.push_back({static_cast<TermId>(t), row[t] * log_fn(30.0 / df[t])});
        out.emplace_back(std::move(e));
      }
      return out;
    };
    const auto base10 = vectors_with([](double x) { return std::log10(x); });
    const auto natural = vectors_with([](double x) { return std::log(x); });
    const TermId term = static_cast<TermId>(rng() % dims);
    const TermVector q10{{term, std::log10(30.0 / df[term])}};
    const TermVector qe{{term, std::log(30.0 / df[term])}};
    auto order = [](const std::vector<TermVector>& docs, const TermVector& q) {
      std::vector<std::pair<double, std::size_t>> s;
      for (std::size_t i = 0; i < docs.size(); ++i) s.push_back({-cosine(docs[i], q), i});
      std::sort(s.begin(), s.end(), [](auto& a, auto& b) {
        if (std::fabs(a.first - b.first) > 1e-12) return a.first < b.first;
        return a.second < b.second;
      });
      std::vector<std::size_t> idx;
      for (auto& [_, i] : s) idx.push_back(i);
      return idx;
    };
    CHECK(order(base10, q10) == order(natural, qe));
  }
}

TEST_CASE("TermVector invariants") {
  CHECK_THROWS_AS(TermVector({{0, -1.0}}), InvalidArgument);
  CHECK_THROWS_AS(TermVector({{0, 1.0}, {0, 2.0}}), InvalidArgument);
  TermVector v{{5, 1.0}, {2, 0.0}, {1, 3.0}};
  CHECK(v.size() == 2);
  CHECK(v.entries()[0].term == 1);
  v.set(3, 2.0);
  v.set(1, 0.0);
  CHECK(v == TermVector{{3, 2.0}, {5, 1.0}});
}

TEST_CASE("index file round-trips exactly") {
  const auto docs = laser_corpus();
  const auto index = build_index(docs);
  std::stringstream buffer;
  write_index(buffer, index);
  const auto bytes = buffer.str();
  const auto back = read_index(buffer);
  CHECK(back == index);
  std::stringstream again;
  write_index(again, back);
  CHECK(again.str() == bytes);

  // Random weights survive bit-for-bit.
  std::vector<Document> many;
  std::mt19937_64 rng(17);
  for (DocId id = 1; id <= 40; ++id) {
    std::vector<std::string> tokens;
    for (int i = 0; i < 12; ++i) tokens.push_back("t" + std::to_string(rng() % 30));
    many.push_back(doc(id * 7, tokens));
  }
  const auto big = build_index(many, 4);
  CHECK(big == build_index(many, 1));
  std::stringstream big_buffer;
  write_index(big_buffer, big);
  CHECK(read_index(big_buffer) == big);
}

TEST_CASE("index reader rejects damaged files") {
  const auto index = build_index(laser_corpus());
  std::stringstream buffer;
  write_index(buffer, index);
  auto bytes = buffer.str();

  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(read_index(truncated), ParseError);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  std::stringstream bm(bad_magic);
  CHECK_THROWS_AS(read_index(bm), ParseError);
  auto bad_version = bytes;
  bad_version[8] = 9;
  std::stringstream bv(bad_version);
  CHECK_THROWS_AS(read_index(bv), ParseError);
}
