#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bfl/errors.hpp"
#include "bfl/price_series.hpp"

namespace bfl {

struct CsvOptions {
    std::string date_column = "Date";
    std::string value_column = "Close";
    std::string label = "CV";
    // With collect_rejects the parser skips bad data rows and reports every
    // one of them; otherwise the first bad row raises a ValidationError.
    bool collect_rejects = false;
};

struct RejectedRow {
    std::size_t line;  // 1-based line number in the file
    ErrorCode code;
    std::string detail;

    bool operator==(const RejectedRow&) const = default;
};

struct ParseResult {
    PriceSeries series;
    std::size_t rows_seen = 0;  // data rows encountered, good or bad
    std::vector<RejectedRow> rejected;
};

// Parses a header-first CSV file into a validated, date-sorted PriceSeries.
// Hard failures regardless of options: missing header columns, duplicate
// dates, fewer than 2 usable rows. Row-level failures (unparsable fields,
// non-positive or non-finite values) follow CsvOptions::collect_rejects.
ParseResult parse_csv(const std::string& path, const CsvOptions& options = {});

// Same parser over an in-memory buffer.
ParseResult parse_csv_text(std::string_view text, const CsvOptions& options = {});

// Two-column CSV (date column, value column) that parse_csv_text accepts
// back; values render in shortest round-trip form so the series survives
// a serialize/parse cycle bit for bit.
std::string to_csv(const PriceSeries& series, const CsvOptions& options = {});

}  // namespace bfl
