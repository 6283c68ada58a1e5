#include "bfl/benford.hpp"

#include <cmath>
#include <stdexcept>

namespace bfl {

namespace {

double log10_ratio(int m) {
    // log10(1 + 1/m), written as log10((m+1)/m) to keep one rounding step
    return std::log10((m + 1.0) / m);
}

}  // namespace

BenfordExpectation bl1() {
    BenfordExpectation e{Law::bl1, {}, {}};
    for (int d = 1; d <= 9; ++d) {
        e.bins.push_back(d);
        e.probs.push_back(log10_ratio(d));
    }
    return e;
}

BenfordExpectation bl2() {
    BenfordExpectation e{Law::bl2, {}, {}};
    for (int d2 = 0; d2 <= 9; ++d2) {
        double p = 0.0;
        for (int d1 = 1; d1 <= 9; ++d1) p += log10_ratio(10 * d1 + d2);
        e.bins.push_back(d2);
        e.probs.push_back(p);
    }
    return e;
}

BenfordExpectation bl12() {
    BenfordExpectation e{Law::bl12, {}, {}};
    for (int m = 10; m <= 99; ++m) {
        e.bins.push_back(m);
        e.probs.push_back(log10_ratio(m));
    }
    return e;
}

BenfordExpectation expectation(Law law) {
    switch (law) {
        case Law::bl1:  return bl1();
        case Law::bl2:  return bl2();
        case Law::bl12: return bl12();
    }
    throw std::logic_error("expectation: bad law");
}

std::vector<double> expected_counts(const BenfordExpectation& law, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("expected_counts: n must be positive");
    std::vector<double> counts;
    counts.reserve(law.probs.size());
    for (double p : law.probs) counts.push_back(p * static_cast<double>(n));
    return counts;
}

}  // namespace bfl
