#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbir/evalkit/metrics.hpp"
#include "cbir/evalkit/qrels.hpp"

namespace cbir::evalkit {

/// Averaged precision table for one engine over a query set.
struct EvalReport {
  std::string dataset;
  std::string engine;
  std::vector<std::pair<DocId, PrecisionRow>> per_query;  ///< evaluated queries, by ranking order given
  PrecisionRow averaged;
  PrecisionRow f_measure;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  ///< queries without relevance judgments
};

/// Queries whose relevant set is empty are skipped and counted.
EvalReport build_report(std::span<const hpga::RankedList> rankings, const Qrels& qrels, std::string dataset,
                        std::string engine);

struct CsvOptions {
  bool full_precision = false;  ///< print %.17g instead of the table display rounding
  bool per_query = false;
};

// Display rounding: precision-like cells with two decimals, averages
// truncated to four decimals, improvement cells as integers. Trailing zeros
// are trimmed ("0.90" -> "0.9", "47.0000" -> "47").
std::string format_cell(double value, const CsvOptions& options);
std::string format_average(double value, const CsvOptions& options);
std::string format_improvement(double value, const CsvOptions& options);

/// Truncates toward zero at `decimals` places, tolerant of binary rounding
/// just below a representable boundary.
double truncate_decimals(double value, int decimals);

inline constexpr std::string_view kCsvHeader = "recall,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,avg";

/// "# ..." summary line, the header, then "precision" and "f_measure" rows
/// (and "query_<id>" rows when requested).
void write_report_csv(std::ostream& out, const EvalReport& report, const CsvOptions& options = {});

/// Three rows in the comparison-table layout: "<a>_precision",
/// "<b>_precision" and "improvement_pct".
void write_comparison_csv(std::ostream& out, const std::string& label_a, const PrecisionRow& a,
                          const std::string& label_b, const PrecisionRow& b, const CsvOptions& options = {});

/// Reads the row labelled `label` from a report CSV. The nine cells are
/// taken as written and the average is recomputed. Throws ParseError when
/// the row is missing or malformed.
PrecisionRow read_precision_row(std::istream& in, const std::string& source = "<stream>",
                                const std::string& label = "precision");

}  // namespace cbir::evalkit
