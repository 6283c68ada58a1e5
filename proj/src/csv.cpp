#include "bfl/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bfl {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool parse_value(std::string_view field, double& out) {
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size();
}

struct Row {
    Date date;
    double close;
    std::size_t line;
};

}  // namespace

ParseResult parse_csv_text(std::string_view text, const CsvOptions& options) {
    // UTF-8 BOM shows up in some vendor exports
    if (text.size() >= 3 && text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);

    std::size_t pos = 0;
    std::size_t line_no = 0;
    auto next_line = [&](std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        line = strip_cr(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        return true;
    };

    std::string_view header;
    if (!next_line(header))
        throw ValidationError(ErrorCode::empty_series, "csv: file is empty");

    auto header_fields = split_fields(header);
    std::size_t date_idx = header_fields.size();
    std::size_t value_idx = header_fields.size();
    for (std::size_t i = 0; i < header_fields.size(); ++i) {
        if (header_fields[i] == options.date_column) date_idx = i;
        if (header_fields[i] == options.value_column) value_idx = i;
    }
    if (date_idx == header_fields.size())
        throw ValidationError(ErrorCode::missing_column,
                              "csv: no column named '" + options.date_column + "'");
    if (value_idx == header_fields.size())
        throw ValidationError(ErrorCode::missing_column,
                              "csv: no column named '" + options.value_column + "'");

    ParseResult result;
    std::vector<Row> rows;
    auto reject = [&](std::size_t line, ErrorCode code, std::string detail) {
        if (!options.collect_rejects)
            throw ValidationError(code, "csv line " + std::to_string(line) + ": " + detail);
        result.rejected.push_back({line, code, std::move(detail)});
    };

    std::string_view line;
    while (next_line(line)) {
        if (line.empty()) continue;
        ++result.rows_seen;
        auto fields = split_fields(line);
        if (fields.size() <= std::max(date_idx, value_idx)) {
            reject(line_no, ErrorCode::unparsable_row, "too few fields");
            continue;
        }
        auto date = Date::parse(fields[date_idx]);
        if (!date) {
            reject(line_no, ErrorCode::unparsable_row,
                   "bad date '" + std::string(fields[date_idx]) + "'");
            continue;
        }
        double close = 0.0;
        if (!parse_value(fields[value_idx], close)) {
            reject(line_no, ErrorCode::unparsable_row,
                   "bad value '" + std::string(fields[value_idx]) + "'");
            continue;
        }
        if (!std::isfinite(close) || close <= 0.0) {
            reject(line_no, ErrorCode::non_positive_price,
                   "value " + std::string(fields[value_idx]) + " is not a positive price");
            continue;
        }
        rows.push_back({*date, close, line_no});
    }

    if (rows.size() < 2)
        throw ValidationError(ErrorCode::empty_series,
                              "csv: fewer than 2 usable rows (" + std::to_string(rows.size()) + ")");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1].date == rows[i].date)
            throw ValidationError(ErrorCode::duplicate_date,
                                  "csv: duplicate date " + rows[i].date.to_string() +
                                      " on lines " + std::to_string(rows[i - 1].line) + " and " +
                                      std::to_string(rows[i].line));
    }

    result.series.label = options.label;
    result.series.dates.reserve(rows.size());
    result.series.closes.reserve(rows.size());
    for (const Row& r : rows) {
        result.series.dates.push_back(r.date);
        result.series.closes.push_back(r.close);
    }
    result.series.validate();
    return result;
}

ParseResult parse_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError(ErrorCode::io_failure, "csv: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv_text(buf.str(), options);
}

std::string to_csv(const PriceSeries& series, const CsvOptions& options) {
    std::string out = options.date_column + "," + options.value_column + "\n";
    char num[40];
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += series.dates[i].to_string();
        out += ',';
        auto res = std::to_chars(num, num + sizeof num, series.closes[i]);
        out.append(num, res.ptr);
        out += '\n';
    }
    return out;
}

}  // namespace bfl
