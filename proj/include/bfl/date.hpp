#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace bfl {

// Calendar date. Text form is strict ISO-8601 (YYYY-MM-DD, zero padded);
// anything else is rejected so that vendor files with ambiguous regional
// formats fail loudly instead of parsing wrong.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    bool ok() const;
    std::string to_string() const;

    static std::optional<Date> parse(std::string_view text);
};

}  // namespace bfl
