#include "cbir/evalkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cbir/util/error.hpp"

namespace cbir::evalkit {
namespace {

std::string printf_double(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

std::string trim_zeros(std::string s) {
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

void write_row(std::ostream& out, const std::string& label, const std::array<double, kLevels>& values,
               double avg, const CsvOptions& options, bool improvement) {
  out << label;
  for (const double v : values) out << ',' << (improvement ? format_improvement(v, options) : format_cell(v, options));
  out << ',' << format_average(avg, options) << '\n';
}

}  // namespace

EvalReport build_report(std::span<const hpga::RankedList> rankings, const Qrels& qrels, std::string dataset,
                        std::string engine) {
  EvalReport report;
  report.dataset = std::move(dataset);
  report.engine = std::move(engine);
  std::vector<PrecisionRow> rows;
  for (const auto& ranked : rankings) {
    auto row = interpolated_precision_row(ranked, qrels.relevant(ranked.query_id));
    if (!row) {
      ++report.skipped;
      continue;
    }
    rows.push_back(*row);
    report.per_query.emplace_back(ranked.query_id, *row);
  }
  report.evaluated = rows.size();
  report.averaged = average_rows(rows);
  report.f_measure = f_measure_row(report.averaged);
  return report;
}

double truncate_decimals(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double magnitude = std::floor(std::fabs(value) * scale + 1e-6) / scale;
  return value < 0 ? -magnitude : magnitude;
}

std::string format_cell(double value, const CsvOptions& options) {
  if (options.full_precision) return printf_double("%.17g", value);
  return trim_zeros(printf_double("%.2f", value));
}

std::string format_average(double value, const CsvOptions& options) {
  if (options.full_precision) return printf_double("%.17g", value);
  return trim_zeros(printf_double("%.4f", truncate_decimals(value, 4)));
}

std::string format_improvement(double value, const CsvOptions& options) {
  if (options.full_precision) return printf_double("%.17g", value);
  return trim_zeros(printf_double("%.0f", std::round(value)));
}

void write_report_csv(std::ostream& out, const EvalReport& report, const CsvOptions& options) {
  out << "# dataset=" << report.dataset << " engine=" << report.engine
      << " queries_evaluated=" << report.evaluated << " queries_skipped=" << report.skipped << '\n';
  out << kCsvHeader << '\n';
  write_row(out, "precision", report.averaged.values, report.averaged.avg, options, false);
  write_row(out, "f_measure", report.f_measure.values, report.f_measure.avg, options, false);
  if (options.per_query)
    for (const auto& [query, row] : report.per_query)
      write_row(out, "query_" + std::to_string(query), row.values, row.avg, options, false);
}

void write_comparison_csv(std::ostream& out, const std::string& label_a, const PrecisionRow& a,
                          const std::string& label_b, const PrecisionRow& b, const CsvOptions& options) {
  const auto improvement = improvement_row(a, b);
  out << kCsvHeader << '\n';
  write_row(out, label_a + "_precision", a.values, a.avg, options, false);
  write_row(out, label_b + "_precision", b.values, b.avg, options, false);
  write_row(out, "improvement_pct", improvement.values, improvement.avg, options, true);
}

PrecisionRow read_precision_row(std::istream& in, const std::string& source, const std::string& label) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream cells(line);
    std::string cell;
    if (!std::getline(cells, cell, ',') || cell != label) continue;
    std::array<double, kLevels> values{};
    for (auto& v : values) {
      if (!std::getline(cells, cell, ',')) throw ParseError(source, line_no, "precision row has too few cells");
      try {
        std::size_t used = 0;
        v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError(source, line_no, "not a number: '" + cell + "'");
      }
    }
    return PrecisionRow::from_values(values);
  }
  throw ParseError(source, 0, "no '" + label + "' row found");
}

}  // namespace cbir::evalkit
