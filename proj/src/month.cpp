#include "invograph/month.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>

#include "invograph/error.hpp"

namespace invograph {

namespace {

bool parse_digits(std::string_view text, int& value) {
    if (text.empty()) return false;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

YearMonth YearMonth::parse(std::string_view text) {
    YearMonth ym;
    if (text.size() != 7 || text[4] != '-' || !parse_digits(text.substr(0, 4), ym.year) ||
        !parse_digits(text.substr(5, 2), ym.month) || ym.month < 1 || ym.month > 12) {
        throw ParseError("invalid month '" + std::string(text) + "' (expected YYYY-MM)");
    }
    return ym;
}

YearMonth YearMonth::from_unix_seconds(std::int64_t seconds) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{unix_day(seconds)}}};
    return YearMonth{static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month()))};
}

std::string YearMonth::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

YearMonth YearMonth::next() const {
    return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
}

std::vector<YearMonth> parse_month_list(std::string_view text) {
    std::vector<YearMonth> months;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto item = text.substr(pos, comma - pos);
        if (auto colon = item.find(':'); colon != std::string_view::npos) {
            const auto first = YearMonth::parse(item.substr(0, colon));
            const auto last = YearMonth::parse(item.substr(colon + 1));
            if (last < first) {
                throw ParseError("month range '" + std::string(item) + "' runs backwards");
            }
            for (auto m = first; m <= last; m = m.next()) months.push_back(m);
        } else {
            months.push_back(YearMonth::parse(item));
        }
        pos = comma + 1;
    }
    std::sort(months.begin(), months.end());
    months.erase(std::unique(months.begin(), months.end()), months.end());
    return months;
}

std::string join_months(const std::vector<YearMonth>& months) {
    std::string out;
    for (const auto& m : months) {
        if (!out.empty()) out += ',';
        out += m.to_string();
    }
    return out;
}

std::int64_t unix_day(std::int64_t seconds) {
    constexpr std::int64_t kDay = 86400;
    return seconds >= 0 ? seconds / kDay : -((-seconds + kDay - 1) / kDay);
}

std::string format_day(std::int64_t day) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{day}}};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

}  // namespace invograph
