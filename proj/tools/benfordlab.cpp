// benfordlab: digit-conformity forensics for numeric time series.
//
//   analyze   full digit-law report on a CSV of dated closes
//   stats     descriptive statistics only
//   digits    digit census for closes or log returns
//   simulate  geometric-Brownian-motion sigma sweep against the digit laws
//
// Exit codes: 0 on success, 2 for bad input or bad usage, 1 for anything
// unexpected.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bfl/benford.hpp"
#include "bfl/chi_square.hpp"
#include "bfl/csv.hpp"
#include "bfl/digits.hpp"
#include "bfl/errors.hpp"
#include "bfl/gbm.hpp"
#include "bfl/hash.hpp"
#include "bfl/report.hpp"
#include "bfl/returns.hpp"
#include "bfl/stats.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonArgs {
    std::string input;
    std::string date_col = "Date";
    std::string value_col = "Close";
    std::size_t subsets = 5;
    std::string out_dir;
    std::string format = "both";
    std::string sign = "all";
    std::vector<std::string> laws;  // subset of {1,2,12}; empty means all
    bool allow_bad_rows = false;
    int round_digits = 5;
};

void add_input_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "CSV file with dated closing values")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--date-col", args.date_col, "date column name (default Date)");
    cmd->add_option("--value-col", args.value_col,
                    "value column name (default Close; pick e.g. 'Adj Close' explicitly "
                    "when the file carries adjusted closes)");
    cmd->add_flag("--allow-bad-rows", args.allow_bad_rows,
                  "skip unparsable or non-positive rows and report them instead of failing");
}

void add_output_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--out-dir", args.out_dir, "directory for report files (none: stdout only)")
        ->envname("BENFORDLAB_OUT_DIR");
    cmd->add_option("--format", args.format, "file export format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
}

bool law_selected(const std::vector<std::string>& laws, const char* name) {
    if (laws.empty()) return true;
    for (const auto& l : laws)
        if (l == name) return true;
    return false;
}

bfl::ExportFormat parse_format(const std::string& format) {
    if (format == "csv") return bfl::ExportFormat::csv;
    if (format == "json") return bfl::ExportFormat::json;
    return bfl::ExportFormat::both;
}

bfl::SignFilter parse_sign(const std::string& sign) {
    if (sign == "pos") return bfl::SignFilter::positive;
    if (sign == "neg") return bfl::SignFilter::negative;
    return bfl::SignFilter::all;
}

bfl::ParseResult load(const CommonArgs& args) {
    bfl::CsvOptions options;
    options.date_column = args.date_col;
    options.value_column = args.value_col;
    options.collect_rejects = args.allow_bad_rows;
    bfl::ParseResult parsed = bfl::parse_csv(args.input, options);
    for (const bfl::RejectedRow& r : parsed.rejected)
        std::cerr << "rejected line " << r.line << " [" << bfl::to_string(r.code)
                  << "]: " << r.detail << "\n";
    return parsed;
}

void print_chi_line(const bfl::SegmentTests& seg, const CommonArgs& args) {
    std::printf("  %-22s n=%-8llu", seg.label.c_str(),
                static_cast<unsigned long long>(seg.census.n));
    static constexpr const char* kNames[3] = {"1", "2", "12"};
    static constexpr const char* kShown[3] = {"BL1", "BL2", "BL12"};
    for (int i = 0; i < 3; ++i) {
        if (!law_selected(args.laws, kNames[i])) continue;
        if (seg.chi[i])
            std::printf("  %s=%.2f%s", kShown[i], seg.chi[i]->statistic,
                        seg.chi[i]->pass ? "*" : "");
        else
            std::printf("  %s=-", kShown[i]);
    }
    std::printf("\n");
}

int run_analyze(const CommonArgs& args) {
    bfl::CsvOptions options;
    options.date_column = args.date_col;
    options.value_column = args.value_col;
    options.collect_rejects = args.allow_bad_rows;
    bfl::AnalysisReport report =
        bfl::analyze_file(args.input, args.subsets, options, args.round_digits);

    std::printf("input: %s (sha256 %s)\n", report.meta.input_path.c_str(),
                report.meta.input_sha256.c_str());
    std::printf("rows: %zu seen, %zu rejected; dates %s .. %s; value column: %s\n",
                report.meta.rows_seen, report.meta.rows_rejected,
                report.meta.first_date.c_str(), report.meta.last_date.c_str(),
                report.meta.value_column.c_str());
    std::printf("zero returns: %llu (", static_cast<unsigned long long>(report.zeros_total));
    for (std::size_t i = 0; i < report.zeros_per_subset.size(); ++i)
        std::printf("%s%llu", i ? " " : "",
                    static_cast<unsigned long long>(report.zeros_per_subset[i]));
    std::printf(" per subset)\n\n");

    std::printf("closing values:\n");
    for (const bfl::SegmentTests& seg : report.cv_tests) print_chi_line(seg, args);

    const bfl::SignFilter wanted = parse_sign(args.sign);
    for (const bfl::SignBlock& block : report.lr_tests) {
        if (args.sign != "all" && block.sign != wanted) continue;
        std::printf("\nlog returns (%s):\n", bfl::to_string(block.sign));
        print_chi_line(block.whole_full, args);
        print_chi_line(block.whole_aligned, args);
        for (const bfl::SegmentTests& seg : block.subsets) print_chi_line(seg, args);
    }
    std::printf("\n* statistic below the 5%% critical value\n");

    if (!args.out_dir.empty()) {
        auto written = bfl::export_report(report, args.out_dir, parse_format(args.format));
        for (const std::string& path : written) std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int run_stats(const CommonArgs& args) {
    bfl::ParseResult parsed = load(args);
    bfl::AnalysisReport report;
    report = bfl::analyze_series(parsed.series, args.subsets, args.round_digits);

    auto print_rows = [](const char* title, const std::vector<bfl::DescriptiveRow>& rows) {
        std::printf("%s\n", title);
        for (const bfl::DescriptiveRow& r : rows) {
            const bfl::DescriptiveStats& s = r.stats;
            std::printf("  %-10s n=%-7zu min=%-12.6g max=%-12.6g mean=%-12.6g std=%-12.6g",
                        r.label.c_str(), s.count, s.min, s.max, s.mean, s.std_dev);
            if (s.skewness) std::printf(" skew=%-10.6g", *s.skewness);
            if (s.excess_kurtosis) std::printf(" exkurt=%-10.6g", *s.excess_kurtosis);
            std::printf("\n");
        }
    };
    print_rows("raw:", report.raw_stats);
    print_rows("rounded:", report.adjusted_stats);

    if (!args.out_dir.empty()) {
        auto written = bfl::export_report(report, args.out_dir, parse_format(args.format));
        for (const std::string& path : written) std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int run_digits(const CommonArgs& args, const std::string& target) {
    bfl::ParseResult parsed = load(args);

    bfl::DigitCensus tally;
    std::uint64_t zero_count = 0;
    if (target == "closes") {
        tally = bfl::rounded_census(parsed.series.closes, args.round_digits);
    } else {
        bfl::ReturnSeries returns = bfl::log_returns(parsed.series);
        bfl::ReturnSeries filtered = bfl::filter_for_digits(returns, parse_sign(args.sign));
        tally = bfl::rounded_census(filtered.values, args.round_digits);
        zero_count = filtered.zero_count;
    }

    std::printf("values: %llu non-zero, %llu zero\n",
                static_cast<unsigned long long>(tally.n),
                static_cast<unsigned long long>(zero_count + tally.zeros));
    if (law_selected(args.laws, "1")) {
        std::printf("first digit:\n");
        for (int d = 1; d <= 9; ++d)
            std::printf("  %d: %llu\n", d, static_cast<unsigned long long>(tally.first[d]));
    }
    if (law_selected(args.laws, "2")) {
        std::printf("second digit:\n");
        for (int d = 0; d <= 9; ++d)
            std::printf("  %d: %llu\n", d, static_cast<unsigned long long>(tally.second[d]));
    }
    if (law_selected(args.laws, "12")) {
        std::printf("first two digits:\n");
        for (int m = 10; m <= 99; ++m)
            std::printf("  %d: %llu\n", m, static_cast<unsigned long long>(tally.first_two[m]));
    }

    if (tally.n > 0) {
        for (bfl::Law law : {bfl::Law::bl1, bfl::Law::bl2, bfl::Law::bl12}) {
            static constexpr const char* kNames[3] = {"1", "2", "12"};
            if (!law_selected(args.laws, kNames[static_cast<int>(law)])) continue;
            bfl::ChiSquareReport chi = bfl::chi_square(tally, bfl::expectation(law));
            std::printf("%s: chi2=%.2f dof=%d critical=%.3f %s\n", bfl::to_string(law),
                        chi.statistic, chi.dof, chi.critical_5pct,
                        chi.pass ? "conforms at 5%" : "rejected at 5%");
        }
    }
    return 0;
}

double resolve_mu(const std::string& text, const CommonArgs& args) {
    if (text.rfind("from:", 0) != 0) {
        try {
            std::size_t used = 0;
            double value = std::stod(text, &used);
            if (used == text.size()) return value;
        } catch (const std::exception&) {
        }
        throw bfl::ValidationError(bfl::ErrorCode::invalid_config,
                                   "simulate: --mu expects a number or from:<label>");
    }
    if (args.input.empty())
        throw bfl::ValidationError(bfl::ErrorCode::invalid_config,
                                   "simulate: --mu from:<label> needs --input");
    const std::string label = text.substr(5);
    bfl::ParseResult parsed = load(args);
    bfl::ReturnSeries returns = bfl::log_returns(parsed.series);
    if (label == returns.parent_label) return bfl::describe(returns.values).mean;
    bfl::ReturnPartition part = bfl::partition_returns(returns, args.subsets);
    for (const bfl::ReturnSeries& sub : part.subsets)
        if (label == sub.parent_label) return bfl::describe(sub.values).mean;
    throw bfl::ValidationError(bfl::ErrorCode::invalid_config,
                               "simulate: no return series labelled " + label);
}

int run_simulate(const CommonArgs& args, const std::string& mu_text, double grid_min,
                 double grid_max, double grid_step, std::size_t days, std::uint64_t seed,
                 double dt, unsigned threads) {
    bfl::GbmConfig config;
    config.mu = resolve_mu(mu_text, args);
    config.sigma_grid = bfl::GbmConfig::make_grid(grid_min, grid_max, grid_step);
    config.n_days = days;
    config.dt = dt;
    config.seed = seed;
    config.threads = threads;
    config.round_digits = args.round_digits;

    std::vector<bfl::SweepRecord> records = bfl::sweep(config);
    bfl::SweepSummary summary = bfl::summarize(records);

    std::printf("sweep: %zu sigmas in [%g, %g], %zu days, dt=%g, mu=%.10g, seed=%llu\n",
                config.sigma_grid.size(), config.sigma_grid.front(), config.sigma_grid.back(),
                config.n_days, config.dt, config.mu,
                static_cast<unsigned long long>(config.seed));
    const bfl::SweepRecord& c = summary.closest;
    std::printf("closest to the critical triple: sigma=%.6g distance=%.4f "
                "(BL1=%.2f BL2=%.2f BL12=%.2f)\n",
                c.sigma, c.distance, c.chi[0], c.chi[1], c.chi[2]);
    static constexpr const char* kShown[3] = {"BL1", "BL2", "BL12"};
    for (int i = 0; i < 3; ++i) {
        const bfl::LawPassStats& s = summary.pass_stats[i];
        std::printf("%s: %zu passing sigmas", kShown[i], s.count);
        if (s.mean) std::printf(", mean=%.6g", *s.mean);
        if (s.std_dev) std::printf(", std=%.6g", *s.std_dev);
        if (s.mean_over_std) std::printf(", mean/std=%.6g", *s.mean_over_std);
        std::printf("\n");
    }

    if (!args.out_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(args.out_dir, ec);
        if (ec)
            throw bfl::ValidationError(bfl::ErrorCode::io_failure,
                                       "simulate: cannot create " + args.out_dir);
        auto write = [&](const std::string& name, const std::string& bytes) {
            fs::path path = fs::path(args.out_dir) / name;
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw bfl::ValidationError(bfl::ErrorCode::io_failure,
                                           "simulate: cannot write " + path.string());
            out << bytes;
            std::printf("wrote %s\n", path.string().c_str());
        };

        bfl::ExportFormat format = parse_format(args.format);
        if (format != bfl::ExportFormat::json) write("sweep.csv", bfl::sweep_to_csv(records));
        if (format != bfl::ExportFormat::csv) {
            ordered_json j;
            j["config"] = {{"mu", config.mu},
                           {"grid_min", config.sigma_grid.front()},
                           {"grid_max", config.sigma_grid.back()},
                           {"grid_size", config.sigma_grid.size()},
                           {"n_days", config.n_days},
                           {"dt", config.dt},
                           {"seed", config.seed},
                           {"round_digits", config.round_digits},
                           {"normal_variates", "inverse-CDF transform of mt19937_64 substreams"}};
            j["closest"] = {{"sigma", c.sigma},
                            {"distance", c.distance},
                            {"chi", {c.chi[0], c.chi[1], c.chi[2]}},
                            {"passes", {c.passes[0], c.passes[1], c.passes[2]}},
                            {"n", c.n},
                            {"zeros", c.zeros}};
            for (int i = 0; i < 3; ++i) {
                const bfl::LawPassStats& s = summary.pass_stats[i];
                ordered_json stats;
                stats["count"] = s.count;
                stats["mean"] = s.mean ? ordered_json(*s.mean) : ordered_json(nullptr);
                stats["std_dev"] = s.std_dev ? ordered_json(*s.std_dev) : ordered_json(nullptr);
                stats["mean_over_std"] =
                    s.mean_over_std ? ordered_json(*s.mean_over_std) : ordered_json(nullptr);
                const auto& sigmas = summary.passing_sigmas[i];
                if (!sigmas.empty()) {
                    std::vector<double> sorted(sigmas);  // already ascending by construction
                    stats["quantiles"] = {{"min", sorted.front()},
                                          {"q1", bfl::quantile_sorted(sorted, 0.25)},
                                          {"median", bfl::quantile_sorted(sorted, 0.5)},
                                          {"q3", bfl::quantile_sorted(sorted, 0.75)},
                                          {"max", sorted.back()}};
                }
                stats["passing_sigmas"] = sigmas;
                j["pass_stats"][kShown[i]] = std::move(stats);
            }
            write("summary.json", j.dump(2) + "\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit-conformity forensics for numeric time series"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonArgs args;

    CLI::App* analyze = app.add_subcommand("analyze", "full digit-law report for a CSV");
    add_input_options(analyze, args);
    add_output_options(analyze, args);
    analyze->add_option("--subsets", args.subsets, "number of contiguous subsets (default 5)")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--sign", args.sign, "restrict printed log-return blocks")
        ->check(CLI::IsMember({"all", "pos", "neg"}));
    analyze->add_option("--laws", args.laws, "restrict printed laws (1, 2, 12)")
        ->check(CLI::IsMember({"1", "2", "12"}));
    analyze->add_option("--round-digits", args.round_digits,
                        "significant digits kept before digit extraction (default 5)")
        ->check(CLI::Range(1, 14));

    CLI::App* stats = app.add_subcommand("stats", "descriptive statistics only");
    add_input_options(stats, args);
    add_output_options(stats, args);
    stats->add_option("--subsets", args.subsets, "number of contiguous subsets (default 5)")
        ->check(CLI::PositiveNumber);
    stats->add_option("--round-digits", args.round_digits,
                      "significant digits for the rounded block (default 5)")
        ->check(CLI::Range(1, 14));

    std::string digits_on = "returns";
    CLI::App* digits = app.add_subcommand("digits", "digit census for closes or log returns");
    add_input_options(digits, args);
    digits->add_option("--on", digits_on, "census target: closes or returns (default)")
        ->check(CLI::IsMember({"closes", "returns"}));
    digits->add_option("--sign", args.sign, "sign filter for returns")
        ->check(CLI::IsMember({"all", "pos", "neg"}));
    digits->add_option("--laws", args.laws, "restrict printed laws (1, 2, 12)")
        ->check(CLI::IsMember({"1", "2", "12"}));
    digits->add_option("--round-digits", args.round_digits,
                       "significant digits kept before digit extraction (default 5)")
        ->check(CLI::Range(1, 14));

    std::string mu_text;
    double grid_min = 0.0001, grid_max = 0.5, grid_step = 0.0001, dt = 1.0;
    std::size_t days = 5000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    CLI::App* simulate =
        app.add_subcommand("simulate", "sigma-grid sweep of simulated log returns");
    simulate->add_option("--mu", mu_text, "drift: a number, or from:<label> (e.g. from:LR_III)")
        ->required();
    simulate->add_option("--grid-min", grid_min, "smallest sigma (default 0.0001)");
    simulate->add_option("--grid-max", grid_max, "largest sigma (default 0.5)");
    simulate->add_option("--grid-step", grid_step, "sigma step (default 0.0001)");
    simulate->add_option("--days", days, "returns per sigma (default 5000)");
    simulate->add_option("--seed", seed, "RNG seed (default 1)");
    simulate->add_option("--dt", dt, "time step (default 1)");
    simulate->add_option("--threads", threads, "worker threads (default: hardware)");
    simulate->add_option("--round-digits", args.round_digits,
                         "significant digits kept before digit extraction (default 5)")
        ->check(CLI::Range(1, 14));
    simulate->add_option("--input", args.input, "CSV used by --mu from:<label>")
        ->check(CLI::ExistingFile);
    simulate->add_option("--date-col", args.date_col, "date column name (default Date)");
    simulate->add_option("--value-col", args.value_col, "value column name (default Close)");
    simulate->add_option("--subsets", args.subsets, "subset count for from:<label> (default 5)")
        ->check(CLI::PositiveNumber);
    add_output_options(simulate, args);

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(args);
        if (stats->parsed()) return run_stats(args);
        if (digits->parsed()) return run_digits(args, digits_on);
        if (simulate->parsed())
            return run_simulate(args, mu_text, grid_min, grid_max, grid_step, days, seed, dt,
                                threads);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bfl::ValidationError& e) {
        std::cerr << "error [" << bfl::to_string(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
