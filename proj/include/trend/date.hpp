#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace trend {

// A point on the series time axis. Real index data carries calendar dates
// ("2011-07-07"); simulated series carry plain trading-day ordinals ("17").
// Both forms live in one type so they flow through the same pipeline: an
// ordinal date is encoded with month == 0 and the ordinal in `day`.
// Ordinals compare among themselves and sort before every calendar date.
struct Date {
    std::int32_t year = 0;
    std::int32_t month = 0; // 1..12 for calendar dates, 0 for ordinals
    std::int32_t day = 0;   // day of month, or the ordinal itself

    static Date calendar(int y, int m, int d) { return Date{y, m, d}; }
    static Date ordinal(std::int64_t k) {
        return Date{0, 0, static_cast<std::int32_t>(k)};
    }

    bool is_ordinal() const { return month == 0; }

    auto operator<=>(const Date&) const = default;

    // Serial day number (days since 1970-01-01) of a calendar date.
    // Standard civil-calendar conversion; exact for all Gregorian dates.
    std::int64_t serial_day() const;

    std::string to_string() const;
};

// Parses "YYYY-MM-DD", or a bare nonnegative integer as an ordinal date.
// Throws FormatError on anything else (including impossible calendar days).
Date parse_date(const std::string& text);

// A calendar month, used by the CPI series.
struct YearMonth {
    std::int32_t year = 0;
    std::int32_t month = 0; // 1..12

    auto operator<=>(const YearMonth&) const = default;

    YearMonth next() const {
        return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
    }
    Date first_day() const { return Date::calendar(year, month, 1); }
    std::string to_string() const;
};

// Parses "YYYY-MM". Throws FormatError on anything else.
YearMonth parse_year_month(const std::string& text);

int days_in_month(int year, int month);

} // namespace trend
