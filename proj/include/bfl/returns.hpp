#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bfl/price_series.hpp"

namespace bfl {

enum class SignFilter { all, positive, negative };

inline const char* to_string(SignFilter sign) {
    switch (sign) {
        case SignFilter::all:      return "all";
        case SignFilter::positive: return "positive";
        case SignFilter::negative: return "negative";
    }
    return "?";
}

// Log returns derived from a price series, or a filtered view of them.
// zero_flags marks positions whose return is exactly zero (equal adjacent
// closes); zero_count is the number of zeros seen in the selection this
// series was built from, whether they are still present or were filtered.
struct ReturnSeries {
    std::vector<double> values;
    std::vector<char> zero_flags;
    std::string parent_label = "LR";
    SignFilter sign_filter = SignFilter::all;
    std::size_t zero_count = 0;

    std::size_t size() const { return values.size(); }

    bool operator==(const ReturnSeries&) const = default;
};

// r_i = ln(close_{i+1} / close_i); length is prices.size() - 1.
ReturnSeries log_returns(const PriceSeries& prices);

// k equal, contiguous, order-preserving chunks. `boundaries` holds the
// exclusive upper index of each chunk; the last equals the input length.
struct PricePartition {
    std::size_t k = 0;
    std::vector<PriceSeries> subsets;
    std::vector<std::size_t> boundaries;
};

struct ReturnPartition {
    std::size_t k = 0;
    std::vector<ReturnSeries> subsets;
    std::vector<std::size_t> boundaries;
};

// Throws indivisible_length unless prices.size() % k == 0.
PricePartition partition_prices(const PriceSeries& prices, std::size_t k);

// Return chunks aligned to the price chunks: chunk j keeps the returns
// computed strictly inside price chunk j, so with chunk size S each one has
// S - 1 entries and the k - 1 returns straddling a chunk boundary belong to
// no chunk. Expects the unfiltered return series; the underlying price
// count (size() + 1) must be divisible by k.
ReturnPartition partition_returns(const ReturnSeries& returns, std::size_t k);

// Drops zeros always, and with a one-sided filter keeps only that sign.
// zero_count reports the zeros that were dropped. Digit censuses run on
// the result; plain descriptive statistics should use the unfiltered input.
ReturnSeries filter_for_digits(const ReturnSeries& returns, SignFilter sign);

}  // namespace bfl
