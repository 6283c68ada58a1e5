#include "bfl/gbm.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include "bfl/benford.hpp"
#include "bfl/chi_square.hpp"
#include "bfl/digits.hpp"
#include "bfl/errors.hpp"

namespace bfl {

void GbmConfig::validate() const {
    if (sigma_grid.empty())
        throw ValidationError(ErrorCode::invalid_config, "gbm: sigma grid is empty");
    double prev = 0.0;
    for (double s : sigma_grid) {
        if (!(s > 0.0) || !std::isfinite(s))
            throw ValidationError(ErrorCode::invalid_config, "gbm: sigmas must be positive");
        if (!(s > prev))
            throw ValidationError(ErrorCode::invalid_config,
                                  "gbm: sigma grid must be strictly increasing");
        prev = s;
    }
    if (n_days == 0)
        throw ValidationError(ErrorCode::invalid_config, "gbm: n_days must be >= 1");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ValidationError(ErrorCode::invalid_config, "gbm: dt must be positive");
    if (!std::isfinite(mu))
        throw ValidationError(ErrorCode::invalid_config, "gbm: mu must be finite");
    if (round_digits < 1)
        throw ValidationError(ErrorCode::invalid_config, "gbm: round_digits must be >= 1");
}

std::vector<double> GbmConfig::make_grid(double lo, double hi, double step) {
    if (!(lo > 0.0) || !(hi >= lo) || !(step > 0.0))
        throw ValidationError(ErrorCode::invalid_config, "gbm: bad grid bounds");
    std::vector<double> grid;
    // half-step slack so hi itself lands on the grid despite rounding
    std::size_t count = static_cast<std::size_t>((hi - lo) / step + 0.5) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double s = lo + static_cast<double>(i) * step;
        if (s > hi * (1.0 + 1e-12)) break;
        grid.push_back(s);
    }
    return grid;
}

std::vector<double> simulate_returns(double mu, double sigma, std::size_t n, double dt,
                                     NormalStream& stream) {
    const double drift = (mu - 0.5 * sigma * sigma) * dt;
    const double scale = sigma * std::sqrt(dt);
    std::vector<double> returns(n);
    for (std::size_t i = 0; i < n; ++i) returns[i] = drift + scale * stream.next();
    return returns;
}

NormalStream column_stream(std::uint64_t seed, std::size_t column) {
    return NormalStream(substream_seed(seed, column));
}

namespace {

SweepRecord run_column(const GbmConfig& config, std::size_t column,
                       const BenfordExpectation& law1, const BenfordExpectation& law2,
                       const BenfordExpectation& law12) {
    NormalStream stream = column_stream(config.seed, column);
    const double sigma = config.sigma_grid[column];
    std::vector<double> returns =
        simulate_returns(config.mu, sigma, config.n_days, config.dt, stream);
    DigitCensus tally = rounded_census(returns, config.round_digits);

    SweepRecord record;
    record.sigma = sigma;
    record.n = tally.n;
    record.zeros = tally.zeros;
    const BenfordExpectation* laws[3] = {&law1, &law2, &law12};
    std::array<double, 3> critical{};
    for (int i = 0; i < 3; ++i) {
        ChiSquareReport report = chi_square(tally, *laws[i]);
        record.chi[i] = report.statistic;
        record.passes[i] = report.pass;
        critical[i] = report.critical_5pct;
    }
    record.distance = criterion_distance(record.chi, critical);
    return record;
}

}  // namespace

std::vector<SweepRecord> sweep(const GbmConfig& config) {
    config.validate();
    const BenfordExpectation law1 = bl1();
    const BenfordExpectation law2 = bl2();
    const BenfordExpectation law12 = bl12();

    std::vector<SweepRecord> records(config.sigma_grid.size());
    unsigned threads = config.threads != 0 ? config.threads
                                           : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<std::size_t>(threads, records.size());

    if (threads <= 1) {
        for (std::size_t j = 0; j < records.size(); ++j)
            records[j] = run_column(config, j, law1, law2, law12);
        return records;
    }

    // Columns are independent; whichever thread claims column j computes the
    // same record, so the output does not depend on the schedule.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t j = next.fetch_add(1);
            if (j >= records.size()) return;
            records[j] = run_column(config, j, law1, law2, law12);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

SweepRecord closest_to_critical(std::span<const SweepRecord> records) {
    if (records.empty())
        throw ValidationError(ErrorCode::empty_sweep, "criterion over an empty sweep");
    const SweepRecord* best = &records[0];
    for (const SweepRecord& r : records) {
        if (r.distance < best->distance ||
            (r.distance == best->distance && r.sigma < best->sigma))
            best = &r;
    }
    return *best;
}

SweepSummary summarize(std::span<const SweepRecord> records) {
    SweepSummary summary;
    summary.closest = closest_to_critical(records);
    for (const SweepRecord& r : records)
        for (int law = 0; law < 3; ++law)
            if (r.passes[law]) summary.passing_sigmas[law].push_back(r.sigma);

    for (int law = 0; law < 3; ++law) {
        const auto& sigmas = summary.passing_sigmas[law];
        LawPassStats& stats = summary.pass_stats[law];
        stats.count = sigmas.size();
        if (sigmas.empty()) continue;
        double sum = 0.0;
        for (double s : sigmas) sum += s;
        double mean = sum / static_cast<double>(sigmas.size());
        stats.mean = mean;
        if (sigmas.size() < 2) continue;
        double ss = 0.0;
        for (double s : sigmas) ss += (s - mean) * (s - mean);
        double sd = std::sqrt(ss / (static_cast<double>(sigmas.size()) - 1.0));
        stats.std_dev = sd;
        if (sd > 0.0) stats.mean_over_std = mean / sd;
    }
    return summary;
}

std::string sweep_to_csv(std::span<const SweepRecord> records) {
    std::string out =
        "sigma,chi_bl1,chi_bl2,chi_bl12,distance,pass_bl1,pass_bl2,pass_bl12,n,zeros\n";
    char buf[40];
    auto append_num = [&](double v, char tail) {
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        out.append(buf, res.ptr);
        out += tail;
    };
    for (const SweepRecord& r : records) {
        append_num(r.sigma, ',');
        append_num(r.chi[0], ',');
        append_num(r.chi[1], ',');
        append_num(r.chi[2], ',');
        append_num(r.distance, ',');
        out += r.passes[0] ? '1' : '0';
        out += ',';
        out += r.passes[1] ? '1' : '0';
        out += ',';
        out += r.passes[2] ? '1' : '0';
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.zeros);
        out += '\n';
    }
    return out;
}

}  // namespace bfl
