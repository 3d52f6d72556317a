#include "cbir/vsm/term_vector.hpp"

#include <algorithm>
#include <cmath>

#include "cbir/util/error.hpp"

namespace cbir::vsm {

TermVector::TermVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw InvalidArgument("term weights must be finite and non-negative");
  }
  std::erase_if(entries_, [](const Entry& e) { return e.weight == 0.0; });
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.term < b.term; });
  const auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                      [](const Entry& a, const Entry& b) { return a.term == b.term; });
  if (dup != entries_.end()) throw InvalidArgument("repeated term id " + std::to_string(dup->term));
}

TermVector TermVector::from_dense(std::span<const double> weights) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0.0) entries.push_back({static_cast<TermId>(i), weights[i]});
  return TermVector(std::move(entries));
}

double TermVector::weight(TermId term) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), term,
                                   [](const Entry& e, TermId t) { return e.term < t; });
  return (it != entries_.end() && it->term == term) ? it->weight : 0.0;
}

void TermVector::set(TermId term, double weight) {
  if (!std::isfinite(weight) || weight < 0.0)
    throw InvalidArgument("term weights must be finite and non-negative");
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), term,
                                   [](const Entry& e, TermId t) { return e.term < t; });
  const bool present = it != entries_.end() && it->term == term;
  if (weight == 0.0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->weight = weight;
  } else {
    entries_.insert(it, Entry{term, weight});
  }
}

double TermVector::squared_norm() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.weight * e.weight;
  return sum;
}

double TermVector::norm() const { return std::sqrt(squared_norm()); }

double dot(const TermVector& a, const TermVector& b) {
  const auto x = a.entries();
  const auto y = b.entries();
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].term < y[j].term) {
      ++i;
    } else if (y[j].term < x[i].term) {
      ++j;
    } else {
      sum += x[i].weight * y[j].weight;
      ++i;
      ++j;
    }
  }
  return sum;
}

}  // namespace cbir::vsm
