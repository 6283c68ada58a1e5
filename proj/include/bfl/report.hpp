#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfl/chi_square.hpp"
#include "bfl/csv.hpp"
#include "bfl/returns.hpp"
#include "bfl/stats.hpp"

namespace bfl {

// Provenance and the conventions baked into an analysis, spelled out so a
// report is interpretable on its own.
struct ReportMeta {
    std::string input_path;
    std::string input_sha256;
    std::string date_column;
    std::string value_column;
    std::size_t rows_seen = 0;
    std::size_t rows_rejected = 0;
    std::string first_date;
    std::string last_date;
    std::size_t subsets = 5;
    int round_digits = 5;
    std::string rounding_rule;
    std::string zero_convention;
    std::string digit_source;

    bool operator==(const ReportMeta&) const = default;
};

struct DescriptiveRow {
    std::string label;
    DescriptiveStats stats;

    bool operator==(const DescriptiveRow&) const = default;
};

// Digit census and the three law tests for one segment of data. chi entries
// are absent when the census is empty (nothing to test).
struct SegmentTests {
    std::string label;
    std::uint64_t zero_count = 0;  // zeros dropped before the census
    DigitCensus census;
    std::array<std::optional<ChiSquareReport>, 3> chi{};  // BL1, BL2, BL12

    bool operator==(const SegmentTests&) const = default;
};

// Log-return tests for one sign selection. The whole series is tested under
// two conventions, which differ in whether the returns straddling subset
// boundaries take part: `whole_full` keeps them, `whole_aligned` drops them
// so its census is the exact sum of the subset censuses. Both raw counts
// are surfaced rather than reconciled.
struct SignBlock {
    SignFilter sign = SignFilter::all;
    std::uint64_t full_count = 0;
    std::uint64_t aligned_count = 0;
    SegmentTests whole_full;
    SegmentTests whole_aligned;
    std::vector<SegmentTests> subsets;

    bool operator==(const SignBlock&) const = default;
};

struct AnalysisReport {
    ReportMeta meta;
    std::vector<DescriptiveRow> raw_stats;       // closes, log returns
    std::vector<DescriptiveRow> adjusted_stats;  // after rounding; whole + subsets
    std::vector<SegmentTests> cv_tests;          // closes: whole + subsets
    std::array<SignBlock, 3> lr_tests;           // all, positive, negative
    std::vector<std::uint64_t> zeros_per_subset;
    std::uint64_t zeros_total = 0;

    bool operator==(const AnalysisReport&) const = default;
};

// Full analysis of a price series: descriptive statistics raw and after
// rounding to `round_digits` significant digits, digit censuses and law
// tests for closes and log returns, whole and in k contiguous subsets,
// log returns additionally split by sign.
AnalysisReport analyze_series(const PriceSeries& prices, std::size_t k = 5,
                              int round_digits = 5);

AnalysisReport analyze_file(const std::string& path, std::size_t k = 5,
                            const CsvOptions& options = {}, int round_digits = 5);

// Lossless JSON round trip: report_from_json(report_to_json(r)) == r.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

// Fixed-width text tables (statistics, law tests, first-digit occurrence
// by subset, zero counts).
std::string render_tables(const AnalysisReport& report);

enum class ExportFormat { json, csv, both };

// Writes the report into `dir` (created if missing) and returns the paths
// written. json: the lossless report plus rendered tables; csv: long-form
// statistic/census tables plus per-law histograms. No timestamps; bytes
// depend only on the report.
std::vector<std::string> export_report(const AnalysisReport& report, const std::string& dir,
                                       ExportFormat format = ExportFormat::both);

}  // namespace bfl
