#pragma once

#include <cstdint>
#include <vector>

namespace bfl {

// The three digit laws tested by the toolkit: first digit, second digit,
// and the first two digits taken together.
enum class Law { bl1, bl2, bl12 };

inline const char* to_string(Law law) {
    switch (law) {
        case Law::bl1:  return "BL1";
        case Law::bl2:  return "BL2";
        case Law::bl12: return "BL12";
    }
    return "?";
}

// Expected digit frequencies under one law. bins and probs are aligned;
// bins run 1..9 (first digit), 0..9 (second digit) or 10..99 (first two).
struct BenfordExpectation {
    Law law;
    std::vector<int> bins;
    std::vector<double> probs;
};

// log10(1 + 1/d) over d = 1..9.
BenfordExpectation bl1();

// Second-digit marginal: P(d2) = sum over d1 of log10(1 + 1/(10*d1 + d2)).
BenfordExpectation bl2();

// log10(1 + 1/m) over m = 10..99.
BenfordExpectation bl12();

BenfordExpectation expectation(Law law);

// probs scaled by n, aligned to law.bins. Requires n > 0.
std::vector<double> expected_counts(const BenfordExpectation& law, std::uint64_t n);

}  // namespace bfl
