#include "bfl/date.hpp"

#include <charconv>
#include <cstdio>

namespace bfl {

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr int kDays[13] = {0, 31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return kDays[month];
}

bool parse_digits(std::string_view text, int& out) {
    for (char c : text) {
        if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

bool Date::ok() const {
    if (year < 1 || month < 1 || month > 12) return false;
    return day >= 1 && day <= days_in_month(year, month);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    Date d;
    if (!parse_digits(text.substr(0, 4), d.year)) return std::nullopt;
    if (!parse_digits(text.substr(5, 2), d.month)) return std::nullopt;
    if (!parse_digits(text.substr(8, 2), d.day)) return std::nullopt;
    if (!d.ok()) return std::nullopt;
    return d;
}

}  // namespace bfl
