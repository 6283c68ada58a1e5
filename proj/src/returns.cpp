#include "bfl/returns.hpp"

#include <cmath>

#include "bfl/errors.hpp"

namespace bfl {

ReturnSeries log_returns(const PriceSeries& prices) {
    prices.validate();
    ReturnSeries r;
    r.parent_label = "LR";
    r.values.reserve(prices.size() - 1);
    r.zero_flags.reserve(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        // equal closes give an exact zero; no epsilon involved
        double value = prices.closes[i + 1] == prices.closes[i]
                           ? 0.0
                           : std::log(prices.closes[i + 1] / prices.closes[i]);
        r.values.push_back(value);
        r.zero_flags.push_back(value == 0.0 ? 1 : 0);
        if (value == 0.0) ++r.zero_count;
    }
    return r;
}

namespace {

std::string roman(std::size_t n) {
    static constexpr struct { std::size_t value; const char* glyph; } steps[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
        {50, "L"},   {40, "XL"},  {10, "X"},  {9, "IX"},   {5, "V"},   {4, "IV"},
        {1, "I"},
    };
    if (n == 0 || n > 3999) return std::to_string(n);
    std::string out;
    for (const auto& s : steps) {
        while (n >= s.value) {
            out += s.glyph;
            n -= s.value;
        }
    }
    return out;
}

void check_divisible(std::size_t length, std::size_t k) {
    if (k == 0)
        throw ValidationError(ErrorCode::invalid_config, "partition: k must be >= 1");
    if (length == 0 || length % k != 0)
        throw ValidationError(ErrorCode::indivisible_length,
                              "partition: length " + std::to_string(length) +
                                  " is not divisible by k = " + std::to_string(k));
}

}  // namespace

PricePartition partition_prices(const PriceSeries& prices, std::size_t k) {
    check_divisible(prices.size(), k);
    const std::size_t chunk = prices.size() / k;

    PricePartition part;
    part.k = k;
    for (std::size_t j = 0; j < k; ++j) {
        PriceSeries sub;
        sub.label = prices.label + "_" + roman(j + 1);
        auto begin = j * chunk;
        sub.dates.assign(prices.dates.begin() + begin, prices.dates.begin() + begin + chunk);
        sub.closes.assign(prices.closes.begin() + begin, prices.closes.begin() + begin + chunk);
        part.subsets.push_back(std::move(sub));
        part.boundaries.push_back(begin + chunk);
    }
    return part;
}

ReturnPartition partition_returns(const ReturnSeries& returns, std::size_t k) {
    if (returns.sign_filter != SignFilter::all)
        throw ValidationError(ErrorCode::invalid_config,
                              "partition: partition the unfiltered returns, filter after");
    check_divisible(returns.size() + 1, k);
    const std::size_t chunk = (returns.size() + 1) / k;  // underlying price chunk

    ReturnPartition part;
    part.k = k;
    for (std::size_t j = 0; j < k; ++j) {
        ReturnSeries sub;
        sub.parent_label = returns.parent_label + "_" + roman(j + 1);
        auto begin = j * chunk;          // return index of the chunk's first price step
        auto end = begin + chunk - 1;    // exclusive; skips the straddling return
        sub.values.assign(returns.values.begin() + begin, returns.values.begin() + end);
        sub.zero_flags.assign(returns.zero_flags.begin() + begin,
                              returns.zero_flags.begin() + end);
        for (char flag : sub.zero_flags)
            if (flag) ++sub.zero_count;
        part.subsets.push_back(std::move(sub));
        part.boundaries.push_back(end);
    }
    return part;
}

ReturnSeries filter_for_digits(const ReturnSeries& returns, SignFilter sign) {
    ReturnSeries out;
    out.parent_label = returns.parent_label;
    out.sign_filter = sign;
    for (std::size_t i = 0; i < returns.values.size(); ++i) {
        double v = returns.values[i];
        if (returns.zero_flags[i]) {
            ++out.zero_count;
            continue;
        }
        if (sign == SignFilter::positive && v <= 0.0) continue;
        if (sign == SignFilter::negative && v >= 0.0) continue;
        out.values.push_back(v);
        out.zero_flags.push_back(0);
    }
    return out;
}

}  // namespace bfl
