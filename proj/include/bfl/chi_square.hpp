#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bfl/benford.hpp"
#include "bfl/digits.hpp"

namespace bfl {

struct BinDetail {
    int bin;
    double observed;
    double expected;
    double contribution;  // (observed - expected)^2 / expected

    bool operator==(const BinDetail&) const = default;
};

// Pearson goodness-of-fit result against one digit law. The test always
// runs over every bin of the law; a digit that never occurs contributes
// its full expected count. `pass` means statistic < critical_5pct.
struct ChiSquareReport {
    Law law = Law::bl1;
    double statistic = 0.0;
    int dof = 0;
    double critical_5pct = 0.0;
    bool pass = false;
    std::uint64_t n = 0;
    bool has_low_expected = false;  // some expected count < 5
    std::vector<BinDetail> per_bin;

    bool operator==(const ChiSquareReport&) const = default;
};

// Bins per law minus one: 8, 9, 89.
int degrees_of_freedom(Law law);

// Upper 5% points of chi-squared at those degrees of freedom, pinned to the
// tabulated three-decimal values so every report compares against the same
// thresholds: 15.507, 16.919, 112.022.
double critical_value_5pct(Law law);

// Upper-tail critical value for arbitrary significance and dof, computed
// from the regularized incomplete gamma function. Used for cross-checks and
// non-default significance levels.
double chi_squared_critical(double upper_tail_prob, int dof);

// Test a census against a law. Throws empty_census when census.n == 0.
ChiSquareReport chi_square(const DigitCensus& census, const BenfordExpectation& law);

// Same test from raw per-bin counts (aligned to law.bins). Counts are real
// valued so that synthetic checks can feed expected counts back in.
ChiSquareReport chi_square_from_counts(std::span<const double> observed,
                                       const BenfordExpectation& law);

// Euclidean distance between a triple of observed statistics and a triple
// of critical values, in (BL1, BL2, BL12) order.
double criterion_distance(const std::array<double, 3>& observed,
                          const std::array<double, 3>& critical);

}  // namespace bfl
