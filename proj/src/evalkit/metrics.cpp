#include "cbir/evalkit/metrics.hpp"

#include <algorithm>

#include "cbir/util/error.hpp"

namespace cbir::evalkit {
namespace {

double mean(const std::array<double, kLevels>& values) {
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(kLevels);
}

}  // namespace

PrecisionRow PrecisionRow::from_values(const std::array<double, kLevels>& values) {
  return PrecisionRow{values, mean(values)};
}

std::optional<RecallPrecision> recall_precision(const hpga::RankedList& ranked, const std::set<DocId>& relevant,
                                                std::size_t cutoff) {
  if (cutoff == 0) throw InvalidArgument("cutoff must be at least 1");
  if (relevant.empty()) return std::nullopt;
  std::size_t hits = 0;
  const std::size_t n = std::min(cutoff, ranked.entries.size());
  for (std::size_t i = 0; i < n; ++i) hits += relevant.contains(ranked.entries[i].doc);
  return RecallPrecision{static_cast<double>(hits) / static_cast<double>(relevant.size()),
                         static_cast<double>(hits) / static_cast<double>(cutoff)};
}

std::optional<PrecisionRow> interpolated_precision_row(const hpga::RankedList& ranked,
                                                       const std::set<DocId>& relevant) {
  if (relevant.empty()) return std::nullopt;
  std::array<double, kLevels> best{};
  const std::size_t total = relevant.size();
  std::size_t hits = 0;
  for (std::size_t c = 1; c <= ranked.entries.size(); ++c) {
    if (!relevant.contains(ranked.entries[c - 1].doc)) continue;
    ++hits;
    const double precision = static_cast<double>(hits) / static_cast<double>(c);
    // recall >= level i/10  <=>  10 * hits >= i * |relevant|, exactly.
    for (std::size_t i = 0; i < kLevels; ++i)
      if (10 * hits >= (i + 1) * total) best[i] = std::max(best[i], precision);
  }
  return PrecisionRow::from_values(best);
}

double f_measure(double recall, double precision) {
  const double sum = recall + precision;
  return sum == 0.0 ? 0.0 : 2.0 * recall * precision / sum;
}

PrecisionRow average_rows(std::span<const PrecisionRow> rows) {
  std::array<double, kLevels> sum{};
  for (const auto& row : rows)
    for (std::size_t i = 0; i < kLevels; ++i) sum[i] += row.values[i];
  if (!rows.empty())
    for (auto& v : sum) v /= static_cast<double>(rows.size());
  return PrecisionRow::from_values(sum);
}

PrecisionRow f_measure_row(const PrecisionRow& precision) {
  std::array<double, kLevels> f{};
  for (std::size_t i = 0; i < kLevels; ++i) f[i] = f_measure(kRecallLevels[i], precision.values[i]);
  return PrecisionRow::from_values(f);
}

ImprovementRow improvement_row(const PrecisionRow& ours, const PrecisionRow& baseline) {
  ImprovementRow row;
  for (std::size_t i = 0; i < kLevels; ++i) row.values[i] = (ours.values[i] - baseline.values[i]) * 100.0;
  row.avg = mean(row.values);
  return row;
}

}  // namespace cbir::evalkit
