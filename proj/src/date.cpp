#include "trend/date.hpp"

#include "trend/errors.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace trend {

namespace {

bool is_leap(int y) {
    return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

// Parses a fixed-width run of digits; returns false on any non-digit.
bool parse_int_field(const std::string& s, size_t pos, size_t len, int& out) {
    if (pos + len > s.size()) return false;
    const char* first = s.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, out);
    return ec == std::errc{} && ptr == first + len;
}

} // namespace

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return lengths[static_cast<size_t>(month - 1)];
}

std::int64_t Date::serial_day() const {
    // days_from_civil (Howard Hinnant's algorithm), era-based.
    std::int64_t y = year;
    const int m = month;
    const int d = day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::string Date::to_string() const {
    char buf[16];
    if (is_ordinal()) {
        std::snprintf(buf, sizeof buf, "%d", day);
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    }
    return buf;
}

Date parse_date(const std::string& text) {
    if (text.empty()) throw FormatError("empty date field");
    if (text.find('-', 1) == std::string::npos) {
        std::int64_t k = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
        if (ec != std::errc{} || ptr != text.data() + text.size() || k < 0)
            throw FormatError("bad date '" + text + "' (expected YYYY-MM-DD or ordinal)");
        return Date::ordinal(k);
    }
    int y = 0, m = 0, d = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !parse_int_field(text, 0, 4, y) || !parse_int_field(text, 5, 2, m) ||
        !parse_int_field(text, 8, 2, d))
        throw FormatError("bad date '" + text + "' (expected YYYY-MM-DD)");
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m))
        throw FormatError("impossible calendar date '" + text + "'");
    return Date::calendar(y, m, d);
}

std::string YearMonth::to_string() const {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

YearMonth parse_year_month(const std::string& text) {
    int y = 0, m = 0;
    if (text.size() != 7 || text[4] != '-' || !parse_int_field(text, 0, 4, y) ||
        !parse_int_field(text, 5, 2, m) || m < 1 || m > 12)
        throw FormatError("bad month '" + text + "' (expected YYYY-MM)");
    return YearMonth{y, m};
}

} // namespace trend
