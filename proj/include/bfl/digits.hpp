#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace bfl {

// First and second significant digits of one value. Sign and decimal point
// never matter. An input exactly equal to zero has no significant digits:
// is_zero is set, d2 is 0 by convention and d1/d12 are left at 0.
struct SignificantDigits {
    int d1 = 0;    // 1..9 for non-zero input
    int d2 = 0;    // 0..9
    int d12 = 0;   // 10..99 for non-zero input
    bool is_zero = false;

    bool operator==(const SignificantDigits&) const = default;
};

// Digit tallies over a sequence. `n` counts the non-zero inputs; values
// exactly equal to zero are counted in `zeros` only. `first` is indexed by
// d1 (1..9), `second` by d2 (0..9), `first_two` by d12 (10..99).
struct DigitCensus {
    std::array<std::uint64_t, 10> first{};
    std::array<std::uint64_t, 10> second{};
    std::array<std::uint64_t, 100> first_two{};
    std::uint64_t zeros = 0;
    std::uint64_t n = 0;

    void add(const SignificantDigits& d);
    DigitCensus& operator+=(const DigitCensus& other);

    bool operator==(const DigitCensus&) const = default;
};

// Rounds x to `sig` significant decimal digits, ties away from zero.
// Zero maps to zero; the sign is preserved. The rounding happens on the
// decimal text of the value, not on binary fractions, so e.g. 0.0999996
// becomes exactly the double closest to 0.10000.
double round_significant(double x, int sig);

// Digits of a finite value, read from its decimal rendering. A value with a
// single significant digit (say 0.002) reports d2 = 0 and d12 = 10*d1.
SignificantDigits extract(double x);

// extract() over a range.
DigitCensus census(std::span<const double> values);

// census() of round_significant(v, sig) for every v, fused into a single
// formatting pass per value. Digit-for-digit identical to rounding first
// and extracting after, just cheaper; the equivalence is property-tested.
DigitCensus rounded_census(std::span<const double> values, int sig = 5);

}  // namespace bfl
