// Acceptance suite: end-to-end checks of the digit-law toolkit against
// an independently computed golden analysis, published reference values,
// and statistical targets for the simulator. Prints one PASS/FAIL line
// per criterion and exits nonzero if any criterion fails.

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bfl/benford.hpp"
#include "bfl/chi_square.hpp"
#include "bfl/digits.hpp"
#include "bfl/gbm.hpp"
#include "bfl/hash.hpp"
#include "bfl/report.hpp"
#include "property_checks.hpp"

namespace {

using json = nlohmann::json;
using clock_type = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string name;
    bool ok = true;
    std::vector<std::string> details;
    double elapsed_s = 0.0;

    void fail(std::string detail) {
        ok = false;
        details.push_back(std::move(detail));
    }
    void require(bool cond, const std::string& detail) {
        if (!cond) fail(detail);
    }
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

bool close_rel(double got, double want, double rel) {
    return std::fabs(got - want) <= rel * std::max(std::fabs(want), 1e-300);
}

bool close_abs(double got, double want, double abs_tol) {
    return std::fabs(got - want) <= abs_tol;
}

// ---------------------------------------------------------------------------
// criterion 1: the three digit laws are genuine distributions

void check_laws(Criterion& c) {
    for (bfl::Law which : {bfl::Law::bl1, bfl::Law::bl2, bfl::Law::bl12}) {
        bfl::BenfordExpectation law = bfl::expectation(which);
        double sum = 0.0;
        for (double p : law.probs) sum += p;
        c.require(std::fabs(sum - 1.0) <= 1e-12,
                  fmt("%s probabilities sum to %.17g, not 1", bfl::to_string(which), sum));
    }
    bfl::BenfordExpectation first = bfl::bl1();
    bfl::BenfordExpectation second = bfl::bl2();
    bfl::BenfordExpectation pair = bfl::bl12();
    for (int d = 1; d <= 9; ++d) {
        double row = 0.0;
        for (int m = 10 * d; m < 10 * (d + 1); ++m) row += pair.probs[m - 10];
        c.require(std::fabs(row - first.probs[d - 1]) <= 1e-12,
                  fmt("pair rows for leading digit %d sum to %.17g, first-digit law says %.17g",
                      d, row, first.probs[d - 1]));
    }
    for (int s = 0; s <= 9; ++s) {
        double col = 0.0;
        for (int m = 10; m <= 99; ++m)
            if (m % 10 == s) col += pair.probs[m - 10];
        c.require(std::fabs(col - second.probs[s]) <= 1e-12,
                  fmt("pair columns for trailing digit %d sum to %.17g, second-digit law says %.17g",
                      s, col, second.probs[s]));
    }
    c.require(close_abs(first.probs[0], 0.30103, 5e-6),
              fmt("P(d1=1) = %.7f, expected 0.30103", first.probs[0]));
    c.require(close_abs(first.probs[8], 0.045757, 5e-6),
              fmt("P(d1=9) = %.7f, expected 0.045757", first.probs[8]));
}

// ---------------------------------------------------------------------------
// criterion 2: digit extraction agrees with an independent printf-based walk

struct OracleDigits {
    int d1, d2, d12;
};

OracleDigits printf_digit_walk(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", std::fabs(x));
    int d1 = buf[0] - '0';
    int d2 = buf[2] - '0';
    return {d1, d2, 10 * d1 + d2};
}

void check_extraction(Criterion& c) {
    std::mt19937_64 rng(0xd161u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> exp10(-8, 8);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> lead(1, 9);
    std::uniform_int_distribution<int> len(1, 14);
    std::uniform_int_distribution<int> wide_exp(-20, 20);

    int mismatches = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        double x;
        if (trial % 2 == 0) {
            x = unit(rng) * std::pow(10.0, exp10(rng));
        } else {
            // a decimal literal with 1..14 significant digits
            std::string text(1, char('0' + lead(rng)));
            int extra = len(rng) - 1;
            for (int i = 0; i < extra; ++i) text.push_back(char('0' + digit(rng)));
            text += "e";
            text += std::to_string(exp10(rng));
            std::from_chars(text.data(), text.data() + text.size(), x);
        }
        if (x == 0.0) continue;
        bfl::SignificantDigits got = bfl::extract(x);
        OracleDigits want = printf_digit_walk(x);
        if (got.d1 != want.d1 || got.d2 != want.d2 || got.d12 != want.d12) {
            if (++mismatches <= 3)
                c.fail(fmt("extract(%.17g) = (%d,%d,%d) but the printf walk gives (%d,%d,%d)",
                           x, got.d1, got.d2, got.d12, want.d1, want.d2, want.d12));
        }
        bfl::SignificantDigits neg = bfl::extract(-x);
        if (neg.d1 != got.d1 || neg.d2 != got.d2 || neg.d12 != got.d12) {
            if (++mismatches <= 6) c.fail(fmt("extract(%.17g) differs under negation", x));
        }
    }
    c.require(mismatches == 0, fmt("%d extraction mismatches out of 100000", mismatches));

    // scale invariance, applied at the decimal level: the same significand
    // parsed under two different powers of ten yields the same digit triple
    int scale_bad = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        std::string mant(1, char('0' + lead(rng)));
        int extra = len(rng) - 1;
        for (int i = 0; i < extra; ++i) mant.push_back(char('0' + digit(rng)));
        double a, b;
        std::string ta = mant + "e" + std::to_string(wide_exp(rng));
        std::string tb = mant + "e" + std::to_string(wide_exp(rng));
        std::from_chars(ta.data(), ta.data() + ta.size(), a);
        std::from_chars(tb.data(), tb.data() + tb.size(), b);
        bfl::SignificantDigits da = bfl::extract(a);
        bfl::SignificantDigits db = bfl::extract(b);
        if (da.d1 != db.d1 || da.d2 != db.d2 || da.d12 != db.d12) {
            if (++scale_bad <= 3)
                c.fail(fmt("significand %s read at two scales gives (%d,%d,%d) vs (%d,%d,%d)",
                           mant.c_str(), da.d1, da.d2, da.d12, db.d1, db.d2, db.d12));
        }
    }
    c.require(scale_bad == 0, fmt("%d scale-invariance breaks out of 20000", scale_bad));
}

// ---------------------------------------------------------------------------
// criterion 3: chi-square mechanics

void check_chi_square(Criterion& c) {
    for (bfl::Law which : {bfl::Law::bl1, bfl::Law::bl2, bfl::Law::bl12}) {
        bfl::BenfordExpectation law = bfl::expectation(which);
        std::vector<double> exact = bfl::expected_counts(law, 12345);
        bfl::ChiSquareReport rep = bfl::chi_square_from_counts(exact, law);
        c.require(rep.statistic == 0.0,
                  fmt("%s statistic on exactly-expected counts is %.3g, not 0",
                      bfl::to_string(which), rep.statistic));
    }
    double d = bfl::criterion_distance({159.29, 12.17, 265.42}, {15.507, 16.919, 112.022});
    c.require(close_abs(d, 210.30, 0.01),
              fmt("distance for the reference statistic triple is %.4f, expected 210.30", d));
}

// ---------------------------------------------------------------------------
// criterion 4: full analysis matches the golden file (or reference values
// computed from the 1950-2014 S&P 500 daily close history, when present)

std::optional<double> json_opt(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

const bfl::SegmentTests* find_segment(const bfl::AnalysisReport& rep, const std::string& label,
                                      const std::string& sign, const std::string& convention) {
    if (sign == "all" && convention == "full" && label == "CV") return &rep.cv_tests[0];
    if (convention == "subset" && label.rfind("CV_", 0) == 0) {
        for (const auto& seg : rep.cv_tests)
            if (seg.label == label) return &seg;
        return nullptr;
    }
    for (const bfl::SignBlock& block : rep.lr_tests) {
        if (bfl::to_string(block.sign) != sign) continue;
        if (convention == "full") return &block.whole_full;
        if (convention == "aligned") return &block.whole_aligned;
        for (const auto& seg : block.subsets)
            if (seg.label == label) return &seg;
    }
    return nullptr;
}

void check_segment(Criterion& c, const bfl::SegmentTests& seg, const json& g,
                   const std::string& where) {
    c.require(seg.census.n == g.at("n").get<std::uint64_t>(),
              fmt("%s: n = %llu, golden says %llu", where.c_str(),
                  (unsigned long long)seg.census.n,
                  (unsigned long long)g.at("n").get<std::uint64_t>()));
    c.require(seg.zero_count == g.at("zeros").get<std::uint64_t>(),
              fmt("%s: zero count differs", where.c_str()));
    for (int i = 0; i < 9; ++i)
        if (seg.census.first[i + 1] != g.at("first")[i].get<std::uint64_t>()) {
            c.fail(fmt("%s: first-digit count for %d differs", where.c_str(), i + 1));
            break;
        }
    for (int i = 0; i < 10; ++i)
        if (seg.census.second[i] != g.at("second")[i].get<std::uint64_t>()) {
            c.fail(fmt("%s: second-digit count for %d differs", where.c_str(), i));
            break;
        }
    for (int i = 0; i < 90; ++i)
        if (seg.census.first_two[i + 10] != g.at("first_two")[i].get<std::uint64_t>()) {
            c.fail(fmt("%s: digit-pair count for %d differs", where.c_str(), i + 10));
            break;
        }
    const char* keys[3] = {"chi_bl1", "chi_bl2", "chi_bl12"};
    for (int i = 0; i < 3; ++i) {
        if (seg.census.n == 0) continue;
        double want = g.at(keys[i]).get<double>();
        double got = seg.chi[i] ? seg.chi[i]->statistic : -1.0;
        c.require(close_abs(got, want, 0.005),
                  fmt("%s: %s = %.6f, golden says %.6f", where.c_str(), keys[i], got, want));
    }
}

void check_stats_row(Criterion& c, const bfl::DescriptiveStats& got, const json& g,
                     const std::string& where) {
    c.require(got.count == g.at("count").get<std::uint64_t>(), where + ": count differs");
    c.require(got.min == g.at("min").get<double>(), where + ": min differs");
    c.require(got.max == g.at("max").get<double>(), where + ": max differs");
    c.require(close_rel(got.total, g.at("total").get<double>(), 1e-9), where + ": total differs");
    c.require(close_rel(got.mean, g.at("mean").get<double>(), 1e-9), where + ": mean differs");
    c.require(close_rel(got.std_dev, g.at("std_dev").get<double>(), 1e-9),
              where + ": std dev differs");
    auto check_opt = [&](const std::optional<double>& a, std::optional<double> b,
                         const char* name) {
        if (a.has_value() != b.has_value()) {
            c.fail(where + ": presence of " + name + " differs");
            return;
        }
        if (a && !close_rel(*a, *b, 1e-9))
            c.fail(fmt("%s: %s = %.12g, golden says %.12g", where.c_str(), name, *a, *b));
    };
    check_opt(got.skewness, json_opt(g, "skewness"), "skewness");
    check_opt(got.excess_kurtosis, json_opt(g, "excess_kurtosis"), "excess kurtosis");
}

void check_against_golden(Criterion& c, const bfl::AnalysisReport& rep, const json& golden,
                          const std::string& fixture_sha) {
    const json& fx = golden.at("fixture");
    c.require(fixture_sha == fx.at("sha256").get<std::string>(),
              "fixture file hash does not match the golden record");

    c.require(rep.zeros_total == golden.at("zeros").at("total").get<std::uint64_t>(),
              fmt("total zero returns = %llu, golden says %llu",
                  (unsigned long long)rep.zeros_total,
                  (unsigned long long)golden.at("zeros").at("total").get<std::uint64_t>()));
    const json& per = golden.at("zeros").at("per_subset");
    c.require(rep.zeros_per_subset.size() == per.size(), "subset count differs");
    for (std::size_t j = 0; j < per.size() && j < rep.zeros_per_subset.size(); ++j)
        c.require(rep.zeros_per_subset[j] == per[j].get<std::uint64_t>(),
                  fmt("zero returns in subset %zu differ", j + 1));

    const json& counts = golden.at("counts");
    c.require(rep.lr_tests[0].full_count == counts.at("lr_full_nonzero").get<std::uint64_t>(),
              "whole-series nonzero return count differs");
    c.require(rep.lr_tests[0].aligned_count == counts.at("lr_aligned_nonzero").get<std::uint64_t>(),
              "subset-aligned nonzero return count differs");
    c.require(rep.lr_tests[1].full_count == counts.at("lr_positive").get<std::uint64_t>(),
              "positive return count differs");
    c.require(rep.lr_tests[2].full_count == counts.at("lr_negative").get<std::uint64_t>(),
              "negative return count differs");

    std::size_t matched = 0;
    for (const json& g : golden.at("stats")) {
        const std::string label = g.at("label").get<std::string>();
        const std::string kind = g.at("kind").get<std::string>();
        const auto& rows = kind == "raw" ? rep.raw_stats : rep.adjusted_stats;
        const bfl::DescriptiveRow* row = nullptr;
        for (const auto& r : rows)
            if (r.label == label) {
                row = &r;
                break;
            }
        if (!row) {
            c.fail(kind + " stats row " + label + " missing from the report");
            continue;
        }
        check_stats_row(c, row->stats, g, kind + " stats " + label);
        ++matched;
    }
    c.require(matched == golden.at("stats").size(), "not all golden stats rows were found");

    std::size_t seg_matched = 0;
    for (const json& g : golden.at("segments")) {
        const std::string label = g.at("label").get<std::string>();
        const std::string sign = g.at("sign").get<std::string>();
        const std::string convention = g.at("convention").get<std::string>();
        const bfl::SegmentTests* seg = find_segment(rep, label, sign, convention);
        if (!seg) {
            c.fail("segment " + label + " (" + sign + ", " + convention +
                   ") missing from the report");
            continue;
        }
        check_segment(c, *seg, g, label + " (" + sign + ", " + convention + ")");
        ++seg_matched;
    }
    c.require(seg_matched == golden.at("segments").size(),
              "not all golden segments were found");
}

// Reference values computed from the 1950-01-03 .. 2014-08-22 S&P 500 daily
// close history (16265 points). Used only when such a file is supplied; the
// re-stated vendor feeds drift at the cents level, hence the 1% band on the
// test statistics. A file whose hash matches the recorded one reproduces the
// statistics to the last printed digit.
const char* kRealSeriesSha256 = "";  // none recorded yet

struct RealChiRow {
    const char* label;
    const char* sign;
    const char* convention;
    std::uint64_t n;
    double bl1, bl2, bl12;
};

void check_against_reference(Criterion& c, const bfl::AnalysisReport& rep) {
    auto sig5 = [](double x) { return bfl::round_significant(x, 5); };

    c.require(rep.raw_stats.size() >= 2, "raw stats rows missing");
    const bfl::DescriptiveStats& cv = rep.raw_stats[0].stats;
    const bfl::DescriptiveStats& lr = rep.raw_stats[1].stats;
    c.require(cv.count == 16265, "close count is not 16265");
    c.require(sig5(cv.min) == 16.66, fmt("min close %.6g", cv.min));
    c.require(sig5(cv.max) == 1992.4, fmt("max close %.6g", cv.max));
    c.require(sig5(cv.mean) == 451.45, fmt("mean close %.6g", cv.mean));
    c.require(sig5(cv.std_dev) == 514.08, fmt("close std dev %.6g", cv.std_dev));
    c.require(cv.skewness && sig5(*cv.skewness) == 1.0637, "close skewness differs");
    c.require(cv.excess_kurtosis && sig5(*cv.excess_kurtosis) == -0.32647,
              "close kurtosis differs");
    c.require(lr.count == 16264, "return count is not 16264");
    c.require(sig5(lr.min) == -0.2290, fmt("min return %.6g", lr.min));
    c.require(sig5(lr.max) == 0.10957, fmt("max return %.6g", lr.max));
    c.require(sig5(lr.mean) == 2.9403e-4, fmt("mean return %.6g", lr.mean));
    c.require(sig5(lr.std_dev) == 9.7315e-3, fmt("return std dev %.6g", lr.std_dev));
    c.require(lr.skewness && sig5(*lr.skewness) == -1.0311, "return skewness differs");
    c.require(lr.excess_kurtosis && sig5(*lr.excess_kurtosis) == 27.727,
              "return kurtosis differs");

    c.require(rep.zeros_total == 124, fmt("zero returns %llu, expected 124",
                                          (unsigned long long)rep.zeros_total));
    const std::vector<std::uint64_t> zeros_want = {78, 26, 15, 3, 2};
    c.require(rep.zeros_per_subset == zeros_want, "zero returns per subset differ");

    // first-digit counts per close subset, exact
    const std::uint64_t d1_want[5][9] = {
        {234, 898, 252, 812, 689, 299, 69, 0, 0},
        {735, 0, 0, 0, 0, 185, 427, 921, 985},
        {2026, 650, 93, 0, 0, 0, 0, 58, 426},
        {899, 117, 682, 818, 171, 220, 126, 60, 160},
        {2751, 0, 0, 0, 0, 4, 27, 229, 242},
    };
    for (int j = 0; j < 5; ++j)
        for (int d = 1; d <= 9; ++d)
            if (rep.cv_tests[j + 1].census.first[d] != d1_want[j][d - 1]) {
                c.fail(fmt("first-digit census of close subset %d differs at digit %d", j + 1, d));
                break;
            }

    const RealChiRow rows[] = {
        {"CV", "all", "full", 16265, 3756.03, 397.46, 7084.40},
        {"CV_I", "all", "subset", 3253, 2737.22, 387.46, 5030.895},
        {"CV_II", "all", "subset", 3253, 10038.14, 544.12, 12840.86},
        {"CV_III", "all", "subset", 3253, 2936.91, 527.02, 5561.862},
        {"CV_IV", "all", "subset", 3253, 1476.73, 302.02, 3496.052},
        {"CV_V", "all", "subset", 3253, 5187.90, 813.99, 7664.894},
        {"LR", "all", "aligned", 16136, 156.66, 4.18, 255.96},
        {"LR_I", "all", "subset", 3174, 101.34, 10.88, 213.45},
        {"LR_II", "all", "subset", 3226, 16.61, 16.30, 146.46},
        {"LR_III", "all", "subset", 3237, 86.25, 8.31, 172.70},
        {"LR_IV", "all", "subset", 3249, 33.99, 4.49, 101.39},
        {"LR_V", "all", "subset", 3250, 19.11, 5.42, 102.23},
        {"LR+", "positive", "aligned", 8614, 115.06, 4.73, 198.02},
        {"LR_I+", "positive", "subset", 1742, 74.97, 5.41, 168.53},
        {"LR_II+", "positive", "subset", 1687, 28.58, 21.38, 135.47},
        {"LR_III+", "positive", "subset", 1690, 33.30, 5.87, 108.90},
        {"LR_IV+", "positive", "subset", 1726, 26.24, 5.42, 113.55},
        {"LR_V+", "positive", "subset", 1769, 17.04, 7.52, 91.69},
        {"LR-", "negative", "aligned", 7522, 54.46, 7.01, 164.81},
        {"LR_I-", "negative", "subset", 1432, 34.07, 10.24, 145.76},
        {"LR_II-", "negative", "subset", 1539, 5.59, 9.53, 120.75},
        {"LR_III-", "negative", "subset", 1547, 59.53, 8.06, 154.73},
        {"LR_IV-", "negative", "subset", 1523, 15.37, 5.30, 83.38},
        {"LR_V-", "negative", "subset", 1481, 12.56, 13.98, 123.31},
    };
    for (const RealChiRow& want : rows) {
        const bfl::SegmentTests* seg = find_segment(rep, want.label, want.sign, want.convention);
        if (!seg) {
            c.fail(fmt("segment %s missing", want.label));
            continue;
        }
        c.require(seg->census.n == want.n,
                  fmt("%s: n = %llu, expected %llu", want.label,
                      (unsigned long long)seg->census.n, (unsigned long long)want.n));
        const double want_chi[3] = {want.bl1, want.bl2, want.bl12};
        for (int i = 0; i < 3; ++i) {
            double got = seg->chi[i] ? seg->chi[i]->statistic : -1.0;
            c.require(close_rel(got, want_chi[i], 0.01),
                      fmt("%s: law %d statistic %.3f vs reference %.3f", want.label, i + 1, got,
                          want_chi[i]));
        }
    }
}

// ---------------------------------------------------------------------------
// criterion 5: simulator sweep hits the published statistical envelope

void check_sweep(Criterion& c, std::vector<bfl::SweepRecord>& records_out) {
    bfl::GbmConfig config;
    config.mu = 2.9403e-4;
    config.sigma_grid = bfl::GbmConfig::make_grid(0.0001, 0.5, 0.0001);
    config.n_days = 5000;
    config.seed = 1;
    c.require(config.sigma_grid.size() == 5000,
              fmt("grid has %zu points, expected 5000", config.sigma_grid.size()));

    records_out = bfl::sweep(config);
    bfl::SweepSummary summary = bfl::summarize(records_out);

    std::size_t grid = records_out.size();
    std::size_t bl1_pass = summary.pass_stats[0].count;
    std::size_t bl2_pass = summary.pass_stats[1].count;
    std::size_t bl12_pass = summary.pass_stats[2].count;
    c.require(bl1_pass < grid / 100,
              fmt("%zu first-digit passes, expected fewer than %zu", bl1_pass, grid / 100));
    c.require(bl12_pass < grid / 100,
              fmt("%zu digit-pair passes, expected fewer than %zu", bl12_pass, grid / 100));
    double frac = double(bl2_pass) / double(grid);
    c.require(std::fabs(frac - 0.719) <= 0.05,
              fmt("second-digit pass fraction %.4f, expected 0.719 +- 0.05", frac));

    const bfl::LawPassStats& bl2 = summary.pass_stats[1];
    c.require(bl2.mean && close_abs(*bl2.mean, 0.2417, 0.02),
              fmt("mean passing sigma %.4f, expected 0.2417 +- 0.02",
                  bl2.mean ? *bl2.mean : -1.0));
    c.require(bl2.std_dev && close_abs(*bl2.std_dev, 0.1441, 0.02),
              fmt("passing-sigma std %.4f, expected 0.1441 +- 0.02",
                  bl2.std_dev ? *bl2.std_dev : -1.0));
    c.require(bl2.mean_over_std && close_abs(*bl2.mean_over_std, 1.6778, 0.1),
              fmt("mean/std ratio %.4f, expected 1.6778 +- 0.1",
                  bl2.mean_over_std ? *bl2.mean_over_std : -1.0));
}

// ---------------------------------------------------------------------------
// criterion 6: determinism of analysis exports and sweeps

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check_determinism(Criterion& c, const std::string& fixture_path) {
    namespace fs = std::filesystem;
    bfl::AnalysisReport a = bfl::analyze_file(fixture_path, 5);
    bfl::AnalysisReport b = bfl::analyze_file(fixture_path, 5);
    c.require(bfl::report_to_json(a) == bfl::report_to_json(b),
              "two identical analyses serialized differently");

    fs::path base = fs::temp_directory_path() / "bfl_acceptance";
    fs::remove_all(base);
    fs::path dir1 = base / "run1";
    fs::path dir2 = base / "run2";
    bfl::export_report(a, dir1.string(), bfl::ExportFormat::both);
    bfl::export_report(b, dir2.string(), bfl::ExportFormat::both);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir1)) {
        ++files;
        fs::path twin = dir2 / entry.path().filename();
        if (!fs::exists(twin)) {
            c.fail("export sets differ: " + entry.path().filename().string());
            continue;
        }
        if (slurp(entry.path()) != slurp(twin))
            c.fail("export differs between runs: " + entry.path().filename().string());
    }
    c.require(files >= 10, fmt("only %zu files exported", files));
    fs::remove_all(base);

    bfl::GbmConfig config;
    config.mu = 2.9403e-4;
    config.sigma_grid = bfl::GbmConfig::make_grid(0.01, 0.15, 0.001);
    config.n_days = 2000;
    config.seed = 99;
    config.threads = 1;
    std::vector<bfl::SweepRecord> serial = bfl::sweep(config);
    config.threads = 3;
    std::vector<bfl::SweepRecord> threaded = bfl::sweep(config);
    c.require(serial == threaded, "sweep records depend on the thread count");
    c.require(bfl::sweep_to_csv(serial) == bfl::sweep_to_csv(threaded),
              "sweep serialization depends on the thread count");
}

// ---------------------------------------------------------------------------
// criterion 7: randomized structural properties

void check_properties(Criterion& c) {
    struct Run {
        const char* name;
        bfl_props::PropertyResult result;
    };
    const Run runs[] = {
        {"census additivity", bfl_props::census_additivity(0xacc7001u, 1000)},
        {"partition round trip", bfl_props::partition_roundtrip(0xacc7002u, 1000)},
        {"sign-split conservation", bfl_props::sign_split_conservation(0xacc7003u, 1000)},
        {"chi-square scaling", bfl_props::chi_square_scaling(0xacc7004u, 1000)},
    };
    for (const Run& run : runs) {
        c.require(run.result.ok(),
                  std::string(run.name) + " failed: " +
                      run.result.failure.value_or("(no detail)"));
        c.require(run.result.cases >= 1000,
                  fmt("%s ran only %zu cases", run.name, run.result.cases));
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string fixture = "data/fixture_index.csv";
    std::string golden_path = "data/fixture_index_golden.json";
    std::string real_path;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--fixture") fixture = argv[i + 1];
        else if (flag == "--golden") golden_path = argv[i + 1];
        else if (flag == "--real") real_path = argv[i + 1];
        else {
            std::fprintf(stderr, "unknown flag %s\n", flag.c_str());
            return 2;
        }
    }

    std::vector<Criterion> criteria;
    auto run = [&](int number, const std::string& name, auto&& body) {
        Criterion c;
        c.number = number;
        c.name = name;
        auto start = clock_type::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        c.elapsed_s = std::chrono::duration<double>(clock_type::now() - start).count();
        criteria.push_back(std::move(c));
    };

    run(1, "digit-law probabilities", [](Criterion& c) { check_laws(c); });
    run(2, "digit extraction vs independent oracle", [](Criterion& c) { check_extraction(c); });
    run(3, "chi-square mechanics and distance metric", [](Criterion& c) { check_chi_square(c); });

    run(4, "full analysis vs golden record", [&](Criterion& c) {
        bool use_real = !real_path.empty() && std::filesystem::exists(real_path);
        if (use_real) {
            bfl::AnalysisReport rep = bfl::analyze_file(real_path, 5);
            std::string sha = bfl::sha256_file(real_path);
            c.details.push_back("checked the supplied historical series (" + sha + ")");
            check_against_reference(c, rep);
            if (*kRealSeriesSha256 && sha != kRealSeriesSha256)
                c.details.push_back("note: file hash differs from the recorded reference");
        } else {
            std::ifstream in(golden_path);
            if (!in) {
                c.fail("cannot open golden file " + golden_path);
                return;
            }
            json golden = json::parse(in);
            bfl::AnalysisReport rep = bfl::analyze_file(fixture, 5);
            check_against_golden(c, rep, golden, bfl::sha256_file(fixture));
        }
    });

    std::vector<bfl::SweepRecord> sweep_records;
    run(5, "simulator sweep statistical envelope",
        [&](Criterion& c) { check_sweep(c, sweep_records); });
    run(6, "byte-level determinism", [&](Criterion& c) { check_determinism(c, fixture); });
    run(7, "randomized structural properties", [](Criterion& c) { check_properties(c); });

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        std::printf("[%s] criterion %d: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), c.elapsed_s);
        for (const std::string& d : c.details) std::printf("        %s\n", d.c_str());
        all_ok = all_ok && c.ok;
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                               : "acceptance: at least one criterion FAILED");
    return all_ok ? 0 : 1;
}
