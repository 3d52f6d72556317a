#include "cbir/hpga/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cbir/util/error.hpp"
#include "cbir/util/parallel.hpp"
#include "cbir/vsm/weighting.hpp"

namespace cbir::hpga {
namespace {

double fitness_of(const Chromosome& c) {
  if (!c.fitness) throw InvalidArgument("chromosome has not been evaluated");
  return *c.fitness;
}

// Strict "a is fitter than b": higher fitness, then lower provenance id.
bool fitter(const Chromosome& a, const Chromosome& b) {
  const double fa = fitness_of(a);
  const double fb = fitness_of(b);
  if (fa != fb) return fa > fb;
  return a.provenance < b.provenance;
}

// Deme positions ordered best first; equal chromosomes keep their order.
std::vector<std::size_t> ranking(const Deme& deme) {
  std::vector<std::size_t> order(deme.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitter(deme.chromosomes[a], deme.chromosomes[b]);
  });
  return order;
}

// Hybrid roulette-tournament selection over one deme, built once per
// generation.
//
// A tournament draws r ~ U[1, n] roulette positions (probability
// proportional to fitness, uniform when every fitness is 0) and keeps the
// fittest, the earliest draw among equals. Rather than drawing the pool, the
// winner is sampled from its exact distribution: with chromosomes grouped by
// equal fitness, best group first, and S_g the roulette mass of groups 1..g,
// P(winner in groups 1..g) = 1 - (1 - S_g)^r, and within its group the winner
// is uniform. This costs O(log n) per tournament instead of O(r log n).
class Selector {
 public:
  explicit Selector(const Deme& deme) : size_(deme.size()) {
    std::vector<std::size_t> order(size_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> fitness(size_);
    double total = 0.0;
    for (std::size_t i = 0; i < size_; ++i) {
      fitness[i] = fitness_of(deme.chromosomes[i]);
      total += fitness[i];
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });

    double mass = 0.0;
    for (std::size_t i = 0; i < size_; ++i) {
      const double f = fitness[order[i]];
      if (total > 0.0 && f <= 0.0) break;  // never drawn from a non-empty wheel
      if (groups_.empty() || groups_.back().fitness != f) groups_.push_back({f, {}, 0.0});
      groups_.back().members.push_back(order[i]);
      mass += total > 0.0 ? f / total : 1.0 / static_cast<double>(size_);
      groups_.back().mass_so_far = mass;
    }
    groups_.back().mass_so_far = 1.0;
  }

  std::size_t tournament(Rng& rng) const {
    const double r = static_cast<double>(1 + rng.uniform_index(size_));
    const double u = rng.uniform01();
    // First group g with 1 - (1 - S_g)^r > u.
    std::size_t lo = 0, hi = groups_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const double reach = groups_[mid].mass_so_far >= 1.0
                               ? 1.0
                               : -std::expm1(r * std::log1p(-groups_[mid].mass_so_far));
      if (reach > u)
        hi = mid;
      else
        lo = mid + 1;
    }
    const auto& members = groups_[lo].members;
    return members.size() == 1 ? members.front() : members[rng.uniform_index(members.size())];
  }

 private:
  struct Group {
    double fitness;
    std::vector<std::size_t> members;  // ascending deme positions
    double mass_so_far;
  };
  std::size_t size_;
  std::vector<Group> groups_;
};

std::vector<TermId> support_union(const vsm::TermVector& a, const vsm::TermVector& b) {
  std::vector<TermId> terms;
  terms.reserve(a.size() + b.size());
  for (const auto& e : a.entries()) terms.push_back(e.term);
  for (const auto& e : b.entries()) terms.push_back(e.term);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

void mutate(Chromosome& c, double rate, Rng& rng) {
  std::vector<vsm::TermVector::Entry> entries(c.genes.entries().begin(), c.genes.entries().end());
  for (auto& e : entries)
    if (rng.uniform01() < rate) e.weight *= 0.5 + rng.uniform01();
  c.genes = vsm::TermVector(std::move(entries));
}

}  // namespace

std::size_t elite_count(std::size_t deme_size) noexcept {
  if (deme_size < 2) return 0;
  return std::max<std::size_t>(1, (4 * deme_size + 99) / 100);
}

std::size_t Deme::elite_count() const noexcept { return hpga::elite_count(size()); }

void GaConfig::validate() const {
  if (migration_interval < 1) throw InvalidArgument("migration interval must be at least 1");
  if (migration_count && *migration_count < 1) throw InvalidArgument("migration count must be at least 1");
  if (mutation_rate < 0.0 || mutation_rate > 1.0) throw InvalidArgument("mutation rate must lie in [0, 1]");
  if (crossover_space == CrossoverSpace::vocabulary && vocabulary_size == 0)
    throw InvalidArgument("vocabulary crossover needs the vocabulary size");
}

RankedList make_ranked_list(DocId query_id, std::vector<ScoredDoc> scores) {
  std::sort(scores.begin(), scores.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc < b.doc;
  });
  return RankedList{query_id, std::move(scores)};
}

std::vector<Deme> init_demes(const kmeans::ClusterSet& clusters, std::span<const std::size_t> selected,
                             std::span<const vsm::TermVector> vectors) {
  if (selected.empty()) throw InvalidArgument("no clusters selected");
  if (vectors.size() != clusters.doc_ids.size())
    throw InvalidArgument("vectors do not match the clustered documents");
  std::vector<Deme> demes;
  demes.reserve(selected.size());
  for (const auto cluster : selected) {
    if (cluster >= clusters.k) throw InvalidArgument("selected cluster index out of range");
    Deme deme;
    deme.index = demes.size();
    for (const auto pos : clusters.members(cluster))
      deme.chromosomes.push_back(Chromosome{vectors[pos], clusters.doc_ids[pos], std::nullopt});
    if (deme.chromosomes.empty())
      throw InvalidArgument("selected cluster " + std::to_string(cluster) + " is empty");
    demes.push_back(std::move(deme));
  }
  return demes;
}

void evaluate_deme(Deme& deme, const vsm::TermVector& query, std::size_t workers) {
  parallel_for(deme.size(), workers, [&](std::size_t i) {
    auto& c = deme.chromosomes[i];
    c.fitness = vsm::cosine(c.genes, query);
  });
}

std::vector<double> fitness_probabilities(const Deme& deme) {
  std::vector<double> p(deme.size());
  double total = 0.0;
  for (const auto& c : deme.chromosomes) total += fitness_of(c);
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = total > 0.0 ? fitness_of(deme.chromosomes[i]) / total : 1.0 / static_cast<double>(p.size());
  return p;
}

std::vector<Chromosome> take_elite(const Deme& deme) {
  const auto order = ranking(deme);
  std::vector<Chromosome> elite;
  const std::size_t n = deme.elite_count();
  elite.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elite.push_back(deme.chromosomes[order[i]]);
  return elite;
}

std::pair<std::size_t, std::size_t> hrts_select(const Deme& deme, Rng& rng) {
  if (deme.size() < 2) throw InvalidArgument("selection needs at least two chromosomes");
  const Selector selector(deme);
  const std::size_t first = selector.tournament(rng);
  const std::size_t second = selector.tournament(rng);
  return {first, second};
}

std::pair<Chromosome, Chromosome> exchange_positions(const Chromosome& p1, const Chromosome& p2, TermId u,
                                                     TermId v) {
  Chromosome c1{p1.genes, p1.provenance, std::nullopt};
  Chromosome c2{p2.genes, p2.provenance, std::nullopt};
  for (const TermId pos : {u, v}) {
    c1.genes.set(pos, p2.genes.weight(pos));
    c2.genes.set(pos, p1.genes.weight(pos));
  }
  const bool second_fitter = p1.fitness && p2.fitness && *p2.fitness > *p1.fitness;
  const DocId heir = second_fitter ? p2.provenance : p1.provenance;
  c1.provenance = heir;
  c2.provenance = heir;
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover_two_positions(const Chromosome& p1, const Chromosome& p2, Rng& rng,
                                                          CrossoverSpace space, std::size_t vocabulary_size) {
  std::vector<TermId> positions;
  if (space == CrossoverSpace::support_union) {
    positions = support_union(p1.genes, p2.genes);
  } else {
    if (vocabulary_size == 0) throw InvalidArgument("vocabulary crossover needs the vocabulary size");
  }
  const std::size_t n = space == CrossoverSpace::support_union ? positions.size() : vocabulary_size;
  auto at = [&](std::size_t i) {
    return space == CrossoverSpace::support_union ? positions[i] : static_cast<TermId>(i);
  };

  if (n == 0) {
    auto [c1, c2] = exchange_positions(p1, p2, 0, 0);
    c1.genes = p1.genes;
    c2.genes = p2.genes;
    return {std::move(c1), std::move(c2)};
  }
  if (n == 1) return exchange_positions(p1, p2, at(0), at(0));
  const std::size_t first = rng.uniform_index(n);
  std::size_t second = rng.uniform_index(n - 1);
  if (second >= first) ++second;
  return exchange_positions(p1, p2, at(first), at(second));
}

Deme next_generation(const Deme& deme, Rng& rng, const GaConfig& config) {
  Deme next;
  next.index = deme.index;
  next.generation = deme.generation + 1;
  if (deme.size() < 2) {
    next.chromosomes = deme.chromosomes;
    return next;
  }
  next.chromosomes = take_elite(deme);
  next.chromosomes.reserve(deme.size());
  const Selector selector(deme);
  while (next.chromosomes.size() < deme.size()) {
    const std::size_t i = selector.tournament(rng);
    const std::size_t j = selector.tournament(rng);
    auto [c1, c2] = crossover_two_positions(deme.chromosomes[i], deme.chromosomes[j], rng,
                                            config.crossover_space, config.vocabulary_size);
    if (config.mutation_enabled) {
      mutate(c1, config.mutation_rate, rng);
      mutate(c2, config.mutation_rate, rng);
    }
    next.chromosomes.push_back(std::move(c1));
    if (next.chromosomes.size() < deme.size()) next.chromosomes.push_back(std::move(c2));
  }
  return next;
}

std::size_t migration_count(const GaConfig& config, std::size_t sender_size, std::size_t receiver_size) {
  const std::size_t wanted =
      config.migration_count ? *config.migration_count : std::max<std::size_t>(1, (5 * sender_size + 99) / 100);
  // The receiver always keeps at least its own best chromosome.
  const std::size_t room = receiver_size > 0 ? receiver_size - 1 : 0;
  return std::min({wanted, sender_size, room});
}

void migrate(std::vector<Deme>& demes, const GaConfig& config) {
  const std::size_t d = demes.size();
  if (d < 2) return;
  std::vector<std::vector<Chromosome>> outgoing(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& receiver = demes[(i + 1) % d];
    const std::size_t n = migration_count(config, demes[i].size(), receiver.size());
    const auto order = ranking(demes[i]);
    for (std::size_t r = 0; r < n; ++r) outgoing[i].push_back(demes[i].chromosomes[order[r]]);
  }
  for (std::size_t i = 0; i < d; ++i) {
    auto& receiver = demes[(i + 1) % d];
    auto& migrants = outgoing[i];
    const auto order = ranking(receiver);
    for (std::size_t r = 0; r < migrants.size(); ++r)
      receiver.chromosomes[order[order.size() - 1 - r]] = std::move(migrants[r]);
  }
}

}  // namespace cbir::hpga
