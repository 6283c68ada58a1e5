#include "bfl/report.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>

#include "bfl/hash.hpp"

namespace bfl {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<SignFilter, 3> kSigns = {SignFilter::all, SignFilter::positive,
                                              SignFilter::negative};
constexpr std::array<Law, 3> kLaws = {Law::bl1, Law::bl2, Law::bl12};

std::string sign_suffix(SignFilter sign) {
    switch (sign) {
        case SignFilter::all:      return "";
        case SignFilter::positive: return "+";
        case SignFilter::negative: return "-";
    }
    return "";
}

void attach_chi(SegmentTests& seg) {
    if (seg.census.n == 0) return;
    for (int i = 0; i < 3; ++i) seg.chi[i] = chi_square(seg.census, expectation(kLaws[i]));
}

SegmentTests make_segment(std::string label, std::span<const double> values,
                          std::uint64_t zero_count, int round_digits) {
    SegmentTests seg;
    seg.label = std::move(label);
    seg.zero_count = zero_count;
    seg.census = rounded_census(values, round_digits);
    attach_chi(seg);
    return seg;
}

std::vector<double> round_all(std::span<const double> values, int round_digits) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(round_significant(v, round_digits));
    return out;
}

}  // namespace

AnalysisReport analyze_series(const PriceSeries& prices, std::size_t k, int round_digits) {
    prices.validate();

    AnalysisReport rep;
    rep.meta.subsets = k;
    rep.meta.round_digits = round_digits;
    rep.meta.rounding_rule = "values rounded to " + std::to_string(round_digits) +
                             " significant decimal digits, ties away from zero";
    rep.meta.zero_convention =
        "zero returns carry no significant digits; they are excluded from digit "
        "censuses and law tests, counted separately, and kept in descriptive statistics";
    rep.meta.digit_source =
        "digits read from the decimal rendering of each value (15 significant digits), "
        "sign and decimal point ignored";
    rep.meta.first_date = prices.dates.front().to_string();
    rep.meta.last_date = prices.dates.back().to_string();

    ReturnSeries returns = log_returns(prices);

    rep.raw_stats.push_back({prices.label, describe(prices.closes)});
    if (returns.size() >= 2)
        rep.raw_stats.push_back({returns.parent_label, describe(returns.values)});

    PricePartition price_part = partition_prices(prices, k);
    ReturnPartition return_part = partition_returns(returns, k);

    rep.adjusted_stats.push_back({prices.label, describe(round_all(prices.closes, round_digits))});
    for (const PriceSeries& sub : price_part.subsets)
        if (sub.size() >= 2)
            rep.adjusted_stats.push_back({sub.label, describe(round_all(sub.closes, round_digits))});
    if (returns.size() >= 2)
        rep.adjusted_stats.push_back(
            {returns.parent_label, describe(round_all(returns.values, round_digits))});
    for (const ReturnSeries& sub : return_part.subsets)
        if (sub.size() >= 2)
            rep.adjusted_stats.push_back(
                {sub.parent_label, describe(round_all(sub.values, round_digits))});

    rep.cv_tests.push_back(make_segment(prices.label, prices.closes, 0, round_digits));
    for (const PriceSeries& sub : price_part.subsets)
        rep.cv_tests.push_back(make_segment(sub.label, sub.closes, 0, round_digits));

    for (std::size_t si = 0; si < kSigns.size(); ++si) {
        const SignFilter sign = kSigns[si];
        const std::string suffix = sign_suffix(sign);
        SignBlock block;
        block.sign = sign;

        ReturnSeries whole = filter_for_digits(returns, sign);
        block.whole_full = make_segment(returns.parent_label + suffix, whole.values,
                                        whole.zero_count, round_digits);
        block.full_count = block.whole_full.census.n;

        SegmentTests aligned;
        aligned.label = returns.parent_label + suffix + " [subset-aligned]";
        for (const ReturnSeries& sub : return_part.subsets) {
            ReturnSeries fsub = filter_for_digits(sub, sign);
            SegmentTests seg = make_segment(sub.parent_label + suffix, fsub.values,
                                            fsub.zero_count, round_digits);
            aligned.census += seg.census;
            aligned.zero_count += seg.zero_count;
            block.subsets.push_back(std::move(seg));
        }
        attach_chi(aligned);
        block.aligned_count = aligned.census.n;
        block.whole_aligned = std::move(aligned);
        rep.lr_tests[si] = std::move(block);
    }

    for (const ReturnSeries& sub : return_part.subsets)
        rep.zeros_per_subset.push_back(sub.zero_count);
    rep.zeros_total = returns.zero_count;
    return rep;
}

AnalysisReport analyze_file(const std::string& path, std::size_t k, const CsvOptions& options,
                            int round_digits) {
    ParseResult parsed = parse_csv(path, options);
    AnalysisReport rep = analyze_series(parsed.series, k, round_digits);
    rep.meta.input_path = path;
    rep.meta.input_sha256 = sha256_file(path);
    rep.meta.date_column = options.date_column;
    rep.meta.value_column = options.value_column;
    rep.meta.rows_seen = parsed.rows_seen;
    rep.meta.rows_rejected = parsed.rejected.size();
    return rep;
}

// ---------------------------------------------------------------------------
// JSON round trip

namespace {

ordered_json stats_to_json(const DescriptiveStats& s) {
    ordered_json j;
    j["count"] = s.count;
    j["min"] = s.min;
    j["max"] = s.max;
    j["total"] = s.total;
    j["mean"] = s.mean;
    j["std_dev"] = s.std_dev;
    j["skewness"] = s.skewness ? ordered_json(*s.skewness) : ordered_json(nullptr);
    j["excess_kurtosis"] =
        s.excess_kurtosis ? ordered_json(*s.excess_kurtosis) : ordered_json(nullptr);
    return j;
}

DescriptiveStats stats_from_json(const ordered_json& j) {
    DescriptiveStats s;
    s.count = j.at("count").get<std::size_t>();
    s.min = j.at("min").get<double>();
    s.max = j.at("max").get<double>();
    s.total = j.at("total").get<double>();
    s.mean = j.at("mean").get<double>();
    s.std_dev = j.at("std_dev").get<double>();
    if (!j.at("skewness").is_null()) s.skewness = j.at("skewness").get<double>();
    if (!j.at("excess_kurtosis").is_null())
        s.excess_kurtosis = j.at("excess_kurtosis").get<double>();
    return s;
}

ordered_json census_to_json(const DigitCensus& c) {
    ordered_json j;
    j["n"] = c.n;
    j["zeros"] = c.zeros;
    j["first"] = std::vector<std::uint64_t>(c.first.begin() + 1, c.first.end());
    j["second"] = std::vector<std::uint64_t>(c.second.begin(), c.second.end());
    j["first_two"] = std::vector<std::uint64_t>(c.first_two.begin() + 10, c.first_two.end());
    return j;
}

DigitCensus census_from_json(const ordered_json& j) {
    DigitCensus c;
    c.n = j.at("n").get<std::uint64_t>();
    c.zeros = j.at("zeros").get<std::uint64_t>();
    auto first = j.at("first").get<std::vector<std::uint64_t>>();
    auto second = j.at("second").get<std::vector<std::uint64_t>>();
    auto first_two = j.at("first_two").get<std::vector<std::uint64_t>>();
    for (int d = 1; d <= 9; ++d) c.first[d] = first.at(d - 1);
    for (int d = 0; d <= 9; ++d) c.second[d] = second.at(d);
    for (int m = 10; m <= 99; ++m) c.first_two[m] = first_two.at(m - 10);
    return c;
}

Law law_from_string(const std::string& name) {
    if (name == "BL1") return Law::bl1;
    if (name == "BL2") return Law::bl2;
    if (name == "BL12") return Law::bl12;
    throw ValidationError(ErrorCode::unparsable_row, "report: unknown law " + name);
}

ordered_json chi_to_json(const ChiSquareReport& r) {
    ordered_json j;
    j["law"] = to_string(r.law);
    j["statistic"] = r.statistic;
    j["dof"] = r.dof;
    j["critical_5pct"] = r.critical_5pct;
    j["pass"] = r.pass;
    j["n"] = r.n;
    j["has_low_expected"] = r.has_low_expected;
    ordered_json bins = ordered_json::array();
    for (const BinDetail& b : r.per_bin)
        bins.push_back({b.bin, b.observed, b.expected, b.contribution});
    j["per_bin"] = std::move(bins);
    return j;
}

ChiSquareReport chi_from_json(const ordered_json& j) {
    ChiSquareReport r;
    r.law = law_from_string(j.at("law").get<std::string>());
    r.statistic = j.at("statistic").get<double>();
    r.dof = j.at("dof").get<int>();
    r.critical_5pct = j.at("critical_5pct").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.n = j.at("n").get<std::uint64_t>();
    r.has_low_expected = j.at("has_low_expected").get<bool>();
    for (const auto& b : j.at("per_bin"))
        r.per_bin.push_back({b.at(0).get<int>(), b.at(1).get<double>(), b.at(2).get<double>(),
                             b.at(3).get<double>()});
    return r;
}

ordered_json segment_to_json(const SegmentTests& seg) {
    ordered_json j;
    j["label"] = seg.label;
    j["zero_count"] = seg.zero_count;
    j["census"] = census_to_json(seg.census);
    ordered_json chi;
    for (int i = 0; i < 3; ++i)
        chi[to_string(kLaws[i])] =
            seg.chi[i] ? chi_to_json(*seg.chi[i]) : ordered_json(nullptr);
    j["chi"] = std::move(chi);
    return j;
}

SegmentTests segment_from_json(const ordered_json& j) {
    SegmentTests seg;
    seg.label = j.at("label").get<std::string>();
    seg.zero_count = j.at("zero_count").get<std::uint64_t>();
    seg.census = census_from_json(j.at("census"));
    for (int i = 0; i < 3; ++i) {
        const auto& cj = j.at("chi").at(to_string(kLaws[i]));
        if (!cj.is_null()) seg.chi[i] = chi_from_json(cj);
    }
    return seg;
}

SignFilter sign_from_string(const std::string& name) {
    if (name == "all") return SignFilter::all;
    if (name == "positive") return SignFilter::positive;
    if (name == "negative") return SignFilter::negative;
    throw ValidationError(ErrorCode::unparsable_row, "report: unknown sign " + name);
}

ordered_json block_to_json(const SignBlock& b) {
    ordered_json j;
    j["sign"] = to_string(b.sign);
    j["full_count"] = b.full_count;
    j["aligned_count"] = b.aligned_count;
    j["whole_full"] = segment_to_json(b.whole_full);
    j["whole_aligned"] = segment_to_json(b.whole_aligned);
    ordered_json subs = ordered_json::array();
    for (const SegmentTests& s : b.subsets) subs.push_back(segment_to_json(s));
    j["subsets"] = std::move(subs);
    return j;
}

SignBlock block_from_json(const ordered_json& j) {
    SignBlock b;
    b.sign = sign_from_string(j.at("sign").get<std::string>());
    b.full_count = j.at("full_count").get<std::uint64_t>();
    b.aligned_count = j.at("aligned_count").get<std::uint64_t>();
    b.whole_full = segment_from_json(j.at("whole_full"));
    b.whole_aligned = segment_from_json(j.at("whole_aligned"));
    for (const auto& s : j.at("subsets")) b.subsets.push_back(segment_from_json(s));
    return b;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
    ordered_json j;
    ordered_json meta;
    meta["input_path"] = report.meta.input_path;
    meta["input_sha256"] = report.meta.input_sha256;
    meta["date_column"] = report.meta.date_column;
    meta["value_column"] = report.meta.value_column;
    meta["rows_seen"] = report.meta.rows_seen;
    meta["rows_rejected"] = report.meta.rows_rejected;
    meta["first_date"] = report.meta.first_date;
    meta["last_date"] = report.meta.last_date;
    meta["subsets"] = report.meta.subsets;
    meta["round_digits"] = report.meta.round_digits;
    meta["rounding_rule"] = report.meta.rounding_rule;
    meta["zero_convention"] = report.meta.zero_convention;
    meta["digit_source"] = report.meta.digit_source;
    j["meta"] = std::move(meta);

    auto rows_to_json = [](const std::vector<DescriptiveRow>& rows) {
        ordered_json arr = ordered_json::array();
        for (const DescriptiveRow& r : rows) {
            ordered_json row;
            row["label"] = r.label;
            row["stats"] = stats_to_json(r.stats);
            arr.push_back(std::move(row));
        }
        return arr;
    };
    j["raw_stats"] = rows_to_json(report.raw_stats);
    j["adjusted_stats"] = rows_to_json(report.adjusted_stats);

    ordered_json cv = ordered_json::array();
    for (const SegmentTests& seg : report.cv_tests) cv.push_back(segment_to_json(seg));
    j["cv_tests"] = std::move(cv);

    ordered_json lr = ordered_json::array();
    for (const SignBlock& b : report.lr_tests) lr.push_back(block_to_json(b));
    j["lr_tests"] = std::move(lr);

    ordered_json zeros;
    zeros["total"] = report.zeros_total;
    zeros["per_subset"] = report.zeros_per_subset;
    j["zeros"] = std::move(zeros);
    return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    AnalysisReport rep;
    const auto& meta = j.at("meta");
    rep.meta.input_path = meta.at("input_path").get<std::string>();
    rep.meta.input_sha256 = meta.at("input_sha256").get<std::string>();
    rep.meta.date_column = meta.at("date_column").get<std::string>();
    rep.meta.value_column = meta.at("value_column").get<std::string>();
    rep.meta.rows_seen = meta.at("rows_seen").get<std::size_t>();
    rep.meta.rows_rejected = meta.at("rows_rejected").get<std::size_t>();
    rep.meta.first_date = meta.at("first_date").get<std::string>();
    rep.meta.last_date = meta.at("last_date").get<std::string>();
    rep.meta.subsets = meta.at("subsets").get<std::size_t>();
    rep.meta.round_digits = meta.at("round_digits").get<int>();
    rep.meta.rounding_rule = meta.at("rounding_rule").get<std::string>();
    rep.meta.zero_convention = meta.at("zero_convention").get<std::string>();
    rep.meta.digit_source = meta.at("digit_source").get<std::string>();

    for (const auto& row : j.at("raw_stats"))
        rep.raw_stats.push_back(
            {row.at("label").get<std::string>(), stats_from_json(row.at("stats"))});
    for (const auto& row : j.at("adjusted_stats"))
        rep.adjusted_stats.push_back(
            {row.at("label").get<std::string>(), stats_from_json(row.at("stats"))});
    for (const auto& seg : j.at("cv_tests")) rep.cv_tests.push_back(segment_from_json(seg));
    const auto& lr = j.at("lr_tests");
    for (std::size_t i = 0; i < rep.lr_tests.size(); ++i)
        rep.lr_tests[i] = block_from_json(lr.at(i));
    rep.zeros_total = j.at("zeros").at("total").get<std::uint64_t>();
    rep.zeros_per_subset =
        j.at("zeros").at("per_subset").get<std::vector<std::uint64_t>>();
    return rep;
}

// ---------------------------------------------------------------------------
// Text tables

namespace {

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

void stats_table(std::string& out, const char* title, const std::vector<DescriptiveRow>& rows) {
    out += title;
    out += '\n';
    out += pad("label", 10) + pad("count", 8) + pad("min", 13) + pad("max", 13) +
           pad("total", 14) + pad("mean", 13) + pad("std_dev", 13) + pad("skew", 11) +
           "ex_kurt\n";
    for (const DescriptiveRow& r : rows) {
        const DescriptiveStats& s = r.stats;
        out += pad(r.label, 10) + pad(std::to_string(s.count), 8) + pad(fmt(s.min), 13) +
               pad(fmt(s.max), 13) + pad(fmt(s.total), 14) + pad(fmt(s.mean), 13) +
               pad(fmt(s.std_dev), 13) +
               pad(s.skewness ? fmt(*s.skewness) : "-", 11) +
               (s.excess_kurtosis ? fmt(*s.excess_kurtosis) : "-") + "\n";
    }
    out += '\n';
}

void chi_row(std::string& out, const SegmentTests& seg, std::uint64_t n_override = 0) {
    std::uint64_t n = n_override != 0 ? n_override : seg.census.n;
    out += pad(seg.label, 24) + pad(std::to_string(n), 8);
    for (int i = 0; i < 3; ++i) {
        std::string cell = "-";
        if (seg.chi[i]) {
            cell = fmt(seg.chi[i]->statistic, "%.2f");
            if (seg.chi[i]->pass) cell += '*';
            if (seg.chi[i]->has_low_expected) cell += '!';
        }
        out += pad(cell, i == 2 ? 0 : 12);
    }
    out += '\n';
}

}  // namespace

std::string render_tables(const AnalysisReport& rep) {
    std::string out;
    out += "input: " + rep.meta.input_path + "\n";
    out += "sha256: " + rep.meta.input_sha256 + "\n";
    out += "dates: " + rep.meta.first_date + " .. " + rep.meta.last_date + "\n";
    out += "value column: " + rep.meta.value_column + "\n";
    out += "rows: " + std::to_string(rep.meta.rows_seen) +
           " seen, " + std::to_string(rep.meta.rows_rejected) + " rejected\n";
    out += "conventions: " + rep.meta.rounding_rule + "; " + rep.meta.zero_convention + "; " +
           rep.meta.digit_source + "\n\n";

    stats_table(out, "== Descriptive statistics, raw ==", rep.raw_stats);
    stats_table(out, ("== Descriptive statistics, rounded to " +
                      std::to_string(rep.meta.round_digits) + " significant digits ==")
                         .c_str(),
                rep.adjusted_stats);

    out += "== Digit-law tests ==\n";
    out += "Pearson chi-squared; 5% critical values: BL1 " +
           fmt(critical_value_5pct(Law::bl1), "%.3f") + " (dof 8), BL2 " +
           fmt(critical_value_5pct(Law::bl2), "%.3f") + " (dof 9), BL12 " +
           fmt(critical_value_5pct(Law::bl12), "%.3f") +
           " (dof 89)\n";
    out += "* statistic below the critical value (conforms at 5%)\n";
    out += "! some expected bin count below 5\n\n";

    out += "-- closing values --\n";
    out += pad("label", 24) + pad("n", 8) + pad("BL1", 12) + pad("BL2", 12) + "BL12\n";
    for (const SegmentTests& seg : rep.cv_tests) chi_row(out, seg);
    out += '\n';

    for (const SignBlock& block : rep.lr_tests) {
        out += "-- log returns, sign: ";
        out += to_string(block.sign);
        out += " (zeros excluded; straddling returns kept in the first row, dropped in the "
               "subset-aligned row) --\n";
        out += pad("label", 24) + pad("n", 8) + pad("BL1", 12) + pad("BL2", 12) + "BL12\n";
        chi_row(out, block.whole_full);
        chi_row(out, block.whole_aligned);
        for (const SegmentTests& seg : block.subsets) chi_row(out, seg);
        out += '\n';
    }

    if (rep.cv_tests.size() > 1) {
        out += "== First-digit occurrence by subset, closing values ==\n";
        out += pad("digit", 7);
        for (std::size_t i = 1; i < rep.cv_tests.size(); ++i)
            out += pad(rep.cv_tests[i].label, 10);
        out += '\n';
        for (int d = 1; d <= 9; ++d) {
            out += pad(std::to_string(d), 7);
            for (std::size_t i = 1; i < rep.cv_tests.size(); ++i)
                out += pad(std::to_string(rep.cv_tests[i].census.first[d]), 10);
            out += '\n';
        }
        out += '\n';
    }

    out += "== Zero returns ==\n";
    out += "total: " + std::to_string(rep.zeros_total) + "\n";
    out += "per subset:";
    for (std::uint64_t z : rep.zeros_per_subset) out += " " + std::to_string(z);
    out += "\n";
    return out;
}

// ---------------------------------------------------------------------------
// File exports

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError(ErrorCode::io_failure, "export: cannot write " + path.string());
    out << bytes;
    if (!out)
        throw ValidationError(ErrorCode::io_failure, "export: short write to " + path.string());
    written.push_back(path.string());
}

void append_num(std::string& out, double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void stats_csv_rows(std::string& out, const char* table, const std::vector<DescriptiveRow>& rows) {
    for (const DescriptiveRow& r : rows) {
        out += table;
        out += ',' + r.label + ',' + std::to_string(r.stats.count) + ',';
        append_num(out, r.stats.min);
        out += ',';
        append_num(out, r.stats.max);
        out += ',';
        append_num(out, r.stats.total);
        out += ',';
        append_num(out, r.stats.mean);
        out += ',';
        append_num(out, r.stats.std_dev);
        out += ',';
        if (r.stats.skewness) append_num(out, *r.stats.skewness);
        out += ',';
        if (r.stats.excess_kurtosis) append_num(out, *r.stats.excess_kurtosis);
        out += '\n';
    }
}

void chi_csv_rows(std::string& out, const std::string& series, const std::string& convention,
                  const SegmentTests& seg, SignFilter sign) {
    for (int i = 0; i < 3; ++i) {
        out += series + ',' + seg.label + ',' + to_string(sign) + ',' + convention + ',';
        out += to_string(kLaws[i]);
        out += ',';
        out += std::to_string(seg.census.n);
        out += ',';
        if (seg.chi[i]) {
            append_num(out, seg.chi[i]->statistic);
            out += ',' + std::to_string(seg.chi[i]->dof) + ',';
            append_num(out, seg.chi[i]->critical_5pct);
            out += ',';
            out += seg.chi[i]->pass ? "1" : "0";
            out += ',';
            out += seg.chi[i]->has_low_expected ? "1" : "0";
        } else {
            out += ",,,,";
        }
        out += '\n';
    }
}

void census_csv_rows(std::string& out, const std::string& series, const std::string& convention,
                     const SegmentTests& seg, SignFilter sign) {
    auto emit = [&](Law law, int bin, std::uint64_t observed, double prob) {
        out += series + ',' + seg.label + ',' + to_string(sign) + ',' + convention + ',';
        out += to_string(law);
        out += ',' + std::to_string(bin) + ',' + std::to_string(observed) + ',';
        if (seg.census.n > 0) {
            append_num(out, prob * static_cast<double>(seg.census.n));
            out += ',';
            append_num(out, static_cast<double>(observed) / static_cast<double>(seg.census.n));
        } else {
            out += ',';
        }
        out += '\n';
    };
    const BenfordExpectation law1 = bl1();
    const BenfordExpectation law2 = bl2();
    const BenfordExpectation law12 = bl12();
    for (int d = 1; d <= 9; ++d) emit(Law::bl1, d, seg.census.first[d], law1.probs[d - 1]);
    for (int d = 0; d <= 9; ++d) emit(Law::bl2, d, seg.census.second[d], law2.probs[d]);
    for (int m = 10; m <= 99; ++m) emit(Law::bl12, m, seg.census.first_two[m], law12.probs[m - 10]);
}

const std::array<std::uint64_t, 10>& law_counts_first(const DigitCensus& c) { return c.first; }

std::string histogram_csv(const std::vector<const SegmentTests*>& columns, Law law) {
    std::string out = "bin";
    for (const SegmentTests* seg : columns) out += ',' + seg->label;
    out += ",expected\n";

    const BenfordExpectation law_def = expectation(law);
    // expected column scales to the first column (the widest segment listed)
    const double n0 = columns.empty() ? 0.0 : static_cast<double>(columns[0]->census.n);
    for (std::size_t i = 0; i < law_def.bins.size(); ++i) {
        int bin = law_def.bins[i];
        out += std::to_string(bin);
        for (const SegmentTests* seg : columns) {
            std::uint64_t count = 0;
            switch (law) {
                case Law::bl1:  count = seg->census.first[bin]; break;
                case Law::bl2:  count = seg->census.second[bin]; break;
                case Law::bl12: count = seg->census.first_two[bin]; break;
            }
            out += ',' + std::to_string(count);
        }
        out += ',';
        append_num(out, law_def.probs[i] * n0);
        out += '\n';
    }
    return out;
}

}  // namespace

std::vector<std::string> export_report(const AnalysisReport& report, const std::string& dir,
                                       ExportFormat format) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw ValidationError(ErrorCode::io_failure,
                              "export: cannot create directory " + dir + ": " + ec.message());

    std::vector<std::string> written;
    const fs::path base(dir);

    write_file(base / "tables.txt", render_tables(report), written);
    if (format == ExportFormat::json || format == ExportFormat::both)
        write_file(base / "report.json", report_to_json(report), written);
    if (format == ExportFormat::json) return written;

    std::string stats =
        "table,label,count,min,max,total,mean,std_dev,skewness,excess_kurtosis\n";
    stats_csv_rows(stats, "raw", report.raw_stats);
    stats_csv_rows(stats, "adjusted", report.adjusted_stats);
    write_file(base / "stats.csv", stats, written);

    std::string chi =
        "series,label,sign,convention,law,n,statistic,dof,critical_5pct,pass,low_expected\n";
    std::string census =
        "series,label,sign,convention,law,bin,observed,expected,proportion\n";
    for (std::size_t i = 0; i < report.cv_tests.size(); ++i) {
        const char* conv = i == 0 ? "full" : "subset";
        chi_csv_rows(chi, "CV", conv, report.cv_tests[i], SignFilter::all);
        census_csv_rows(census, "CV", conv, report.cv_tests[i], SignFilter::all);
    }
    for (const SignBlock& block : report.lr_tests) {
        chi_csv_rows(chi, "LR", "full", block.whole_full, block.sign);
        chi_csv_rows(chi, "LR", "subset_aligned", block.whole_aligned, block.sign);
        census_csv_rows(census, "LR", "full", block.whole_full, block.sign);
        census_csv_rows(census, "LR", "subset_aligned", block.whole_aligned, block.sign);
        for (const SegmentTests& seg : block.subsets) {
            chi_csv_rows(chi, "LR", "subset", seg, block.sign);
            census_csv_rows(census, "LR", "subset", seg, block.sign);
        }
    }
    write_file(base / "chi_square.csv", chi, written);
    write_file(base / "census.csv", census, written);

    if (report.cv_tests.size() > 1) {
        std::string first = "digit";
        for (std::size_t i = 1; i < report.cv_tests.size(); ++i)
            first += ',' + report.cv_tests[i].label;
        first += '\n';
        for (int d = 1; d <= 9; ++d) {
            first += std::to_string(d);
            for (std::size_t i = 1; i < report.cv_tests.size(); ++i)
                first += ',' + std::to_string(law_counts_first(report.cv_tests[i].census)[d]);
            first += '\n';
        }
        write_file(base / "first_digit_by_subset.csv", first, written);
    }

    for (Law law : kLaws) {
        std::string name = to_string(law);
        for (char& c : name) c = static_cast<char>(std::tolower(c));
        {
            std::vector<const SegmentTests*> cols;
            cols.push_back(&report.cv_tests[0]);
            for (std::size_t i = 1; i < report.cv_tests.size(); ++i)
                cols.push_back(&report.cv_tests[i]);
            write_file(base / ("hist_cv_" + name + ".csv"), histogram_csv(cols, law), written);
        }
        {
            const SignBlock& all = report.lr_tests[0];
            std::vector<const SegmentTests*> cols;
            cols.push_back(&all.whole_aligned);
            for (const SegmentTests& seg : all.subsets) cols.push_back(&seg);
            write_file(base / ("hist_lr_" + name + ".csv"), histogram_csv(cols, law), written);
        }
    }
    return written;
}

}  // namespace bfl
