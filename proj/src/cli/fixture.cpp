#include "cbir/cli/fixture.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "cbir/corpus/document.hpp"
#include "cbir/corpus/porter.hpp"
#include "cbir/corpus/text.hpp"
#include "cbir/util/error.hpp"
#include "cbir/util/rng.hpp"

namespace cbir::cli {
namespace {

constexpr std::size_t kWordsPerTopic = 12;
constexpr std::size_t kQueryWords = 4;
constexpr DocId kMissingIdOffset = 100000;

// Pronounceable pseudo-words whose stems are pairwise distinct and never
// stopwords, so topics share no index terms.
std::vector<std::vector<std::string>> topic_words(std::size_t topics, Rng& rng) {
  static constexpr std::string_view kConsonants = "bdfgklmnprstvz";
  static constexpr std::string_view kVowels = "aeiou";
  std::set<std::string> stems;
  std::vector<std::vector<std::string>> words(topics);
  for (auto& topic : words) {
    while (topic.size() < kWordsPerTopic) {
      std::string w;
      for (int syllable = 0; syllable < 3; ++syllable) {
        w.push_back(kConsonants[rng.uniform_index(kConsonants.size())]);
        w.push_back(kVowels[rng.uniform_index(kVowels.size())]);
      }
      w.push_back(kConsonants[rng.uniform_index(kConsonants.size())]);
      const auto stem = corpus::porter_stem(w);
      if (corpus::StopList::standard().contains(w) || corpus::StopList::standard().contains(stem)) continue;
      if (!stems.insert(stem).second) continue;
      topic.push_back(std::move(w));
    }
  }
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s.push_back(' ');
    s += w;
  }
  return s;
}

// A document mixing at least one query word with other topic words, never
// equal to the query as a multiset.
std::string topical_text(const std::vector<std::string>& vocab, const std::vector<std::string>& query, Rng& rng) {
  std::vector<std::string> words{query[rng.uniform_index(query.size())]};
  const std::size_t extra = 3 + rng.uniform_index(5);
  for (std::size_t i = 0; i < extra; ++i)
    words.push_back(vocab[kQueryWords + rng.uniform_index(vocab.size() - kQueryWords)]);
  return join(words);
}

}  // namespace

void write_fixture(const std::filesystem::path& dir, const FixtureSpec& spec) {
  if (spec.kind != "duplicates" && spec.kind != "disjoint" && spec.kind != "separated")
    throw InvalidArgument("unknown fixture kind '" + spec.kind + "' (duplicates, disjoint, separated)");
  if (spec.topics == 0 || spec.docs_per_topic == 0)
    throw InvalidArgument("fixtures need at least one topic and one document per topic");
  if (spec.relevant_per_query > spec.docs_per_topic)
    throw InvalidArgument("relevant_per_query exceeds docs_per_topic");

  Rng rng(derive_seed(spec.seed, {0x66697874ULL}));
  const auto vocab = topic_words(spec.topics, rng);

  std::ostringstream docs, queries, qrels;
  DocId next_doc = 1;
  for (std::size_t t = 0; t < spec.topics; ++t) {
    const std::vector<std::string> query(vocab[t].begin(), vocab[t].begin() + kQueryWords);
    const DocId query_id = static_cast<DocId>(t + 1);
    queries << ".I " << query_id << "\n.W\n" << join(query) << '\n';

    for (std::size_t d = 0; d < spec.docs_per_topic; ++d) {
      const DocId id = next_doc++;
      const bool relevant = spec.kind == "separated" || d < spec.relevant_per_query;
      const bool duplicate = spec.kind != "separated" && d < spec.relevant_per_query;
      docs << ".I " << id << "\n.T\ntopic document " << id << "\n.W\n"
           << (duplicate ? join(query) : topical_text(vocab[t], query, rng)) << '\n';
      if (relevant) qrels << query_id << ' ' << (spec.kind == "disjoint" ? id + kMissingIdOffset : id) << " 0 0\n";
    }
  }

  std::filesystem::create_directories(dir);
  auto write = [&](const std::filesystem::path& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << text;
  };
  write(kFixtureDocs, docs.str());
  write(kFixtureQueries, queries.str());
  write(kFixtureQrels, qrels.str());
}

}  // namespace cbir::cli
