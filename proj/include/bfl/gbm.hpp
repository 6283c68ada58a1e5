#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfl/random.hpp"

namespace bfl {

// One simulated-return experiment per grid volatility: draw n_days returns,
// test their digits against all three laws.
struct GbmConfig {
    double mu = 0.0;
    std::vector<double> sigma_grid;
    std::size_t n_days = 5000;
    double dt = 1.0;
    std::uint64_t seed = 1;
    unsigned threads = 0;   // 0 means hardware concurrency
    int round_digits = 5;   // significant digits kept before the census

    // throws invalid_config on an unusable setup
    void validate() const;

    // lo, lo + step, ... capped at hi (inclusive when it lands on the grid)
    static std::vector<double> make_grid(double lo, double hi, double step);
};

struct SweepRecord {
    double sigma = 0.0;
    std::array<double, 3> chi{};     // BL1, BL2, BL12 statistics
    double distance = 0.0;           // Euclidean distance to the critical triple
    std::array<bool, 3> passes{};    // statistic < 5% critical value
    std::uint64_t n = 0;             // non-zero returns behind the censuses
    std::uint64_t zeros = 0;

    bool operator==(const SweepRecord&) const = default;
};

struct LawPassStats {
    std::size_t count = 0;
    std::optional<double> mean;
    std::optional<double> std_dev;
    std::optional<double> mean_over_std;  // ratio as computed: mean / std_dev

    bool operator==(const LawPassStats&) const = default;
};

struct SweepSummary {
    SweepRecord closest;                                // minimal distance, ties to smaller sigma
    std::array<std::vector<double>, 3> passing_sigmas;  // per law
    std::array<LawPassStats, 3> pass_stats;
};

// n log returns of a geometric Brownian motion observed at step dt:
// (mu - sigma^2/2) dt + sigma sqrt(dt) z, with z drawn from `stream`.
std::vector<double> simulate_returns(double mu, double sigma, std::size_t n, double dt,
                                     NormalStream& stream);

// The stream sweep() uses for grid column j. Exposed so that single columns
// can be replayed exactly.
NormalStream column_stream(std::uint64_t seed, std::size_t column);

// One record per grid sigma, in grid order. Each column draws from its own
// substream, so results are byte-identical for any thread count.
std::vector<SweepRecord> sweep(const GbmConfig& config);

// Record with the smallest distance to the critical triple; ties resolve to
// the smaller sigma. Throws empty_sweep on no records.
SweepRecord closest_to_critical(std::span<const SweepRecord> records);

// Per-law lists of sigmas whose statistic passes the 5% test, with mean,
// sample standard deviation, and their ratio (absent while fewer than two
// resp. one sigma pass).
SweepSummary summarize(std::span<const SweepRecord> records);

// Long-form CSV of all records: sigma, the three statistics, distance,
// pass flags, counts.
std::string sweep_to_csv(std::span<const SweepRecord> records);

}  // namespace bfl
