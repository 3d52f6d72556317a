#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>

#include "cbir/hpga/types.hpp"

namespace cbir::evalkit {

inline constexpr std::size_t kLevels = 9;
/// Recall levels 0.1, 0.2, ..., 0.9.
inline constexpr std::array<double, kLevels> kRecallLevels{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

struct RecallPrecision {
  double recall = 0.0;
  double precision = 0.0;
};

/// Recall and precision over the top `cutoff` entries (precision divides by
/// `cutoff` even when the list is shorter). Returns nullopt when `relevant`
/// is empty; throws InvalidArgument when cutoff is 0.
std::optional<RecallPrecision> recall_precision(const hpga::RankedList& ranked, const std::set<DocId>& relevant,
                                                std::size_t cutoff);

/// Nine precision values, one per recall level, and their mean.
struct PrecisionRow {
  std::array<double, kLevels> values{};
  double avg = 0.0;

  static PrecisionRow from_values(const std::array<double, kLevels>& values);
  friend bool operator==(const PrecisionRow&, const PrecisionRow&) = default;
};

/// Interpolated precision: at level r, the best precision over all cutoffs
/// whose recall is at least r (0 if recall never reaches r).
/// Returns nullopt when `relevant` is empty.
std::optional<PrecisionRow> interpolated_precision_row(const hpga::RankedList& ranked,
                                                       const std::set<DocId>& relevant);

/// Harmonic mean 2RP / (R + P); 0 when R + P = 0.
double f_measure(double recall, double precision);

/// Level-wise mean of `rows`; all zeros for an empty span.
PrecisionRow average_rows(std::span<const PrecisionRow> rows);

/// f_measure(level, precision) at each recall level.
PrecisionRow f_measure_row(const PrecisionRow& precision);

/// (ours - baseline) x 100 per level, with the mean of those differences.
struct ImprovementRow {
  std::array<double, kLevels> values{};
  double avg = 0.0;
};

ImprovementRow improvement_row(const PrecisionRow& ours, const PrecisionRow& baseline);

}  // namespace cbir::evalkit
