#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace bfl {

// Summary statistics for one value sequence. Skewness and excess kurtosis
// carry the usual small-sample adjustments and are absent when undefined
// (fewer than 3 resp. 4 values, or zero variance).
struct DescriptiveStats {
    std::size_t count = 0;
    double min = 0.0;
    double max = 0.0;
    double total = 0.0;
    double mean = 0.0;
    double std_dev = 0.0;  // sample standard deviation (n - 1)
    std::optional<double> skewness;
    std::optional<double> excess_kurtosis;

    bool operator==(const DescriptiveStats&) const = default;
};

// Throws too_few_values for fewer than 2 values.
DescriptiveStats describe(std::span<const double> values);

// Linear-interpolation quantile of an already sorted sequence, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

}  // namespace bfl
