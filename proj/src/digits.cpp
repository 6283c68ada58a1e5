#include "bfl/digits.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <system_error>

namespace bfl {

namespace {

// Values are rendered to 15 significant digits before any digit is read.
// For a double that was parsed from a decimal with at most 14 significant
// digits, the nearest-double error is below 0.12 units of the 15th digit,
// so the rendering reproduces the intended decimal digits exactly and the
// digit walk below never sees binary-fraction noise. 16 or 17 digits would
// not be safe: the closest double to 0.3 renders as 2.99999999999999989e-1
// at 18 digits, and the leading digit of a rounded tail can flip.
constexpr int kRenderDigits = 15;

struct DecimalForm {
    char digits[kRenderDigits];  // mantissa digits, most significant first
    int exponent;                // value = digits[0].digits[1..] * 10^exponent
};

DecimalForm render(double magnitude) {
    assert(magnitude > 0.0 && std::isfinite(magnitude));
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, magnitude,
                             std::chars_format::scientific, kRenderDigits - 1);
    assert(res.ec == std::errc{});

    DecimalForm form{};
    form.digits[0] = buf[0];
    assert(buf[1] == '.');
    std::memcpy(form.digits + 1, buf + 2, kRenderDigits - 1);

    const char* exp = buf + 1 + kRenderDigits + 1;  // past "d.<14 digits>e"
    assert(exp[-1] == 'e');
    if (*exp == '+') ++exp;  // from_chars rejects an explicit plus sign
    auto conv = std::from_chars(exp, res.ptr, form.exponent);
    assert(conv.ec == std::errc{});
    (void)conv;
    return form;
}

// Truncates the mantissa to `sig` digits, rounding half away from zero.
// A carry off the top ("999.." -> "100..") bumps the exponent.
void round_at(DecimalForm& form, int sig) {
    assert(sig >= 1 && sig < kRenderDigits);
    if (form.digits[sig] < '5') return;
    int i = sig - 1;
    while (i >= 0 && form.digits[i] == '9') form.digits[i--] = '0';
    if (i < 0) {
        form.digits[0] = '1';
        ++form.exponent;
    } else {
        ++form.digits[i];
    }
}

SignificantDigits digits_of(const DecimalForm& form, int sig) {
    SignificantDigits d;
    d.d1 = form.digits[0] - '0';
    d.d2 = sig >= 2 ? form.digits[1] - '0' : 0;
    d.d12 = 10 * d.d1 + d.d2;
    return d;
}

}  // namespace

void DigitCensus::add(const SignificantDigits& d) {
    if (d.is_zero) {
        ++zeros;
        return;
    }
    ++first[d.d1];
    ++second[d.d2];
    ++first_two[d.d12];
    ++n;
}

DigitCensus& DigitCensus::operator+=(const DigitCensus& other) {
    for (int i = 0; i < 10; ++i) first[i] += other.first[i];
    for (int i = 0; i < 10; ++i) second[i] += other.second[i];
    for (int i = 0; i < 100; ++i) first_two[i] += other.first_two[i];
    zeros += other.zeros;
    n += other.n;
    return *this;
}

double round_significant(double x, int sig) {
    if (sig < 1) throw std::invalid_argument("round_significant: sig must be >= 1");
    if (x == 0.0) return 0.0;
    if (!std::isfinite(x)) throw std::invalid_argument("round_significant: non-finite input");
    if (sig >= kRenderDigits) return x;  // beyond rendering precision: identity

    DecimalForm form = render(std::fabs(x));
    round_at(form, sig);

    char buf[32];
    buf[0] = form.digits[0];
    buf[1] = '.';
    std::memcpy(buf + 2, form.digits + 1, sig - 1);
    int len = 1 + sig;
    if (sig == 1) len = 1;  // "d" rather than "d."
    buf[len++] = 'e';
    auto res = std::to_chars(buf + len, buf + sizeof buf, form.exponent);
    assert(res.ec == std::errc{});

    double rounded = 0.0;
    auto conv = std::from_chars(buf, res.ptr, rounded);
    assert(conv.ec == std::errc{});
    (void)conv;
    return std::copysign(rounded, x);
}

SignificantDigits extract(double x) {
    if (x == 0.0) return {.d1 = 0, .d2 = 0, .d12 = 0, .is_zero = true};
    if (!std::isfinite(x)) throw std::invalid_argument("extract: non-finite input");
    DecimalForm form = render(std::fabs(x));
    return digits_of(form, kRenderDigits);
}

DigitCensus census(std::span<const double> values) {
    DigitCensus tally;
    for (double v : values) tally.add(extract(v));
    return tally;
}

DigitCensus rounded_census(std::span<const double> values, int sig) {
    if (sig < 1) throw std::invalid_argument("rounded_census: sig must be >= 1");
    DigitCensus tally;
    if (sig >= kRenderDigits) {
        for (double v : values) tally.add(extract(v));
        return tally;
    }
    for (double v : values) {
        if (v == 0.0) {
            ++tally.zeros;
            continue;
        }
        if (!std::isfinite(v)) throw std::invalid_argument("rounded_census: non-finite input");
        DecimalForm form = render(std::fabs(v));
        round_at(form, sig);
        tally.add(digits_of(form, sig));
    }
    return tally;
}

}  // namespace bfl
