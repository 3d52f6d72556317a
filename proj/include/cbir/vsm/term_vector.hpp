#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cbir {

/// Dense vocabulary index of a term.
using TermId = std::uint32_t;

}  // namespace cbir

namespace cbir::vsm {

/// Sparse non-negative weight vector over vocabulary ids.
///
/// Entries are kept sorted by term id; zero weights are never stored.
class TermVector {
 public:
  struct Entry {
    TermId term;
    double weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  TermVector() = default;
  /// Entries in any order; zero weights are dropped. Throws InvalidArgument
  /// on negative or non-finite weights and on repeated term ids.
  explicit TermVector(std::vector<Entry> entries);
  TermVector(std::initializer_list<Entry> entries) : TermVector(std::vector<Entry>(entries)) {}

  /// Dense view: position i holds the weight of term i.
  static TermVector from_dense(std::span<const double> weights);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 0 for absent terms.
  double weight(TermId term) const;
  /// Stores `weight` for `term`, erasing the entry when it is 0.
  void set(TermId term, double weight);

  double squared_norm() const;
  double norm() const;

  friend bool operator==(const TermVector&, const TermVector&) = default;

 private:
  std::vector<Entry> entries_;
};

double dot(const TermVector& a, const TermVector& b);

}  // namespace cbir::vsm
