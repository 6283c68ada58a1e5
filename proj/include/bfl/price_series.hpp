#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bfl/date.hpp"

namespace bfl {

// A dated sequence of positive closing values, strictly ascending by date.
struct PriceSeries {
    std::vector<Date> dates;
    std::vector<double> closes;
    std::string label = "CV";

    std::size_t size() const { return closes.size(); }

    // Throws ValidationError when an invariant does not hold: matching
    // lengths, at least 2 rows, positive finite closes, strictly
    // ascending valid dates.
    void validate() const;

    bool operator==(const PriceSeries&) const = default;
};

}  // namespace bfl
