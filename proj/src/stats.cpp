#include "bfl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bfl/errors.hpp"

namespace bfl {

DescriptiveStats describe(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2)
        throw ValidationError(ErrorCode::too_few_values,
                              "describe: need at least 2 values");

    DescriptiveStats s;
    s.count = n;
    s.min = values[0];
    s.max = values[0];
    for (double v : values) {
        s.total += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    const double nd = static_cast<double>(n);
    s.mean = s.total / nd;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        double d = v - s.mean;
        double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nd;
    m3 /= nd;
    m4 /= nd;

    s.std_dev = std::sqrt(m2 * nd / (nd - 1.0));

    if (n >= 3 && m2 > 0.0) {
        // Fisher-Pearson skewness with the sample-size adjustment
        double g1 = m3 / std::pow(m2, 1.5);
        s.skewness = g1 * std::sqrt(nd * (nd - 1.0)) / (nd - 2.0);
    }
    if (n >= 4 && m2 > 0.0) {
        // sample excess kurtosis, adjusted the same way
        double g2 = m4 / (m2 * m2);
        s.excess_kurtosis = (nd - 1.0) / ((nd - 2.0) * (nd - 3.0)) *
                            ((nd + 1.0) * g2 - 3.0 * (nd - 1.0));
    }
    return s;
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile_sorted: empty input");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile_sorted: q outside [0,1]");
    if (sorted.size() == 1) return sorted[0];
    double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo >= sorted.size() - 1) return sorted.back();
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace bfl
