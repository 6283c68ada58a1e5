#pragma once

#include <cstdint>
#include <optional>
#include <string>

// randomized invariant checks shared by the unit tests and the acceptance
// gate; each runs `cases` independent random instances and reports the
// first violation

namespace bfl_props {

struct PropertyResult {
    std::size_t cases = 0;
    std::optional<std::string> failure;

    bool ok() const { return !failure.has_value(); }
};

// census(a ++ b ++ c) equals census(a) + census(b) + census(c)
PropertyResult census_additivity(std::uint64_t seed, std::size_t cases);

// concatenating partition subsets reproduces the series, boundaries and all
PropertyResult partition_roundtrip(std::uint64_t seed, std::size_t cases);

// positive and negative selections split the unsigned selection exactly,
// with zeros accounted separately
PropertyResult sign_split_conservation(std::uint64_t seed, std::size_t cases);

// scaling every observed count by m scales the chi-squared statistic by m
PropertyResult chi_square_scaling(std::uint64_t seed, std::size_t cases);

}  // namespace bfl_props
