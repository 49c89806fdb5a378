#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace invograph {

// Calendar month, written YYYY-MM.
struct YearMonth {
    int year = 1970;
    int month = 1;

    static YearMonth parse(std::string_view text);
    static YearMonth from_unix_seconds(std::int64_t seconds);

    std::string to_string() const;
    YearMonth next() const;

    auto operator<=>(const YearMonth&) const = default;
};

// Accepts "2016-01", "2016-01:2016-09" (inclusive range) and comma-separated
// combinations of both. Result is sorted and de-duplicated.
std::vector<YearMonth> parse_month_list(std::string_view text);

std::string join_months(const std::vector<YearMonth>& months);

// Days since 1970-01-01 for a unix timestamp (floor division).
std::int64_t unix_day(std::int64_t seconds);

// YYYY-MM-DD for a day index since the epoch.
std::string format_day(std::int64_t day);

}  // namespace invograph
