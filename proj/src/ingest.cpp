#include "trend/ingest.hpp"

#include "trend/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace trend {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splits text into lines, tolerating \r\n and a missing final newline.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = nl + 1;
    }
    return lines;
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = strip(s);
    if (t.empty()) return false;
    const char* first = t.data();
    auto [ptr, ec] = std::from_chars(first, first + t.size(), out);
    return ec == std::errc{} && ptr == first + t.size() && std::isfinite(out);
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

PriceSeries parse_prices(const std::string& csv_text, const std::string& label) {
    const auto lines = split_lines(csv_text);
    if (lines.empty()) throw FormatError("empty price CSV");

    const auto header = split_fields(lines[0]);
    std::ptrdiff_t date_col = -1, close_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string name = strip(header[c]);
        if (name == "Date") date_col = static_cast<std::ptrdiff_t>(c);
        if (name == "Close") close_col = static_cast<std::ptrdiff_t>(c);
    }
    if (date_col < 0 || close_col < 0) {
        std::string found;
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c) found += ", ";
            found += "'" + strip(header[c]) + "'";
        }
        throw FormatError("price CSV header must contain Date and Close columns; found " + found);
    }

    PriceSeries series;
    series.label = label;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (strip(lines[row]).empty()) continue;
        const auto fields = split_fields(lines[row]);
        if (fields.size() != header.size())
            throw FormatError("row " + std::to_string(row + 1) + ": expected " +
                              std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
        Date date;
        try {
            date = parse_date(strip(fields[static_cast<std::size_t>(date_col)]));
        } catch (const FormatError& e) {
            throw FormatError("row " + std::to_string(row + 1) + ": " + e.what());
        }
        double close = 0.0;
        if (!parse_double(fields[static_cast<std::size_t>(close_col)], close))
            throw DataError("row " + std::to_string(row + 1) +
                            ": missing or non-numeric Close '" +
                            strip(fields[static_cast<std::size_t>(close_col)]) + "'");
        if (close <= 0.0)
            throw DataError("row " + std::to_string(row + 1) +
                            ": non-positive Close " + fmt12(close));
        series.entries.push_back({date, close});
    }

    std::stable_sort(series.entries.begin(), series.entries.end(),
                     [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < series.entries.size(); ++i) {
        if (series.entries[i].date == series.entries[i - 1].date)
            throw DataError("duplicate date " + series.entries[i].date.to_string());
    }
    return series;
}

CpiSeries parse_cpi(const std::string& csv_text) {
    const auto lines = split_lines(csv_text);
    if (lines.empty()) throw FormatError("empty CPI CSV");

    const auto header = split_fields(lines[0]);
    if (header.size() < 2 || strip(header[0]) != "Month" || strip(header[1]) != "Value")
        throw FormatError("CPI CSV header must be 'Month,Value'");

    CpiSeries cpi;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (strip(lines[row]).empty()) continue;
        const auto fields = split_fields(lines[row]);
        if (fields.size() < 2)
            throw FormatError("CPI row " + std::to_string(row + 1) + ": expected Month,Value");
        const YearMonth month = parse_year_month(strip(fields[0]));
        double value = 0.0;
        if (!parse_double(fields[1], value) || value <= 0.0)
            throw DataError("CPI row " + std::to_string(row + 1) +
                            ": value must be a positive number");
        if (!cpi.entries.empty()) {
            const YearMonth expected = cpi.entries.back().month.next();
            if (month == cpi.entries.back().month)
                throw DataError("duplicate CPI month " + month.to_string());
            if (month != expected)
                throw DataError("CPI gap: missing month " + expected.to_string());
        }
        cpi.entries.push_back({month, value});
    }
    if (cpi.entries.empty()) throw FormatError("CPI CSV has no data rows");
    return cpi;
}

std::vector<double> interpolate_cpi_daily(const CpiSeries& cpi,
                                          const std::vector<Date>& dates) {
    if (cpi.entries.empty()) throw SizeError("empty CPI series");
    const Date first_anchor = cpi.entries.front().month.first_day();
    const Date last_anchor = cpi.entries.back().month.first_day();

    std::vector<double> out;
    out.reserve(dates.size());
    for (const Date& date : dates) {
        if (date.is_ordinal() || date < first_anchor || date > last_anchor)
            throw RangeError("date " + date.to_string() + " outside CPI anchor range [" +
                             first_anchor.to_string() + ", " + last_anchor.to_string() + "]");
        // Locate the month containing the date.
        const YearMonth ym{date.year, date.month};
        const auto it = std::lower_bound(
            cpi.entries.begin(), cpi.entries.end(), ym,
            [](const CpiEntry& e, const YearMonth& m) { return e.month < m; });
        const std::size_t idx = static_cast<std::size_t>(it - cpi.entries.begin());
        if (date.day == 1) {
            out.push_back(cpi.entries[idx].value);
            continue;
        }
        const double lo = cpi.entries[idx].value;
        const double hi = cpi.entries[idx + 1].value;
        const double span = static_cast<double>(days_in_month(date.year, date.month));
        const double offset = static_cast<double>(date.day - 1);
        out.push_back(lo + (hi - lo) * offset / span);
    }
    return out;
}

PriceSeries deflate(const PriceSeries& prices, const CpiSeries& cpi,
                    const Date& base_date) {
    std::vector<Date> dates;
    dates.reserve(prices.size() + 1);
    dates.push_back(base_date);
    for (const auto& p : prices.entries) dates.push_back(p.date);
    const std::vector<double> cpi_daily = interpolate_cpi_daily(cpi, dates);
    const double base_cpi = cpi_daily[0];

    PriceSeries out;
    out.label = prices.label;
    out.entries.reserve(prices.size());
    for (std::size_t i = 0; i < prices.size(); ++i) {
        out.entries.push_back(
            {prices.entries[i].date, prices.entries[i].value * base_cpi / cpi_daily[i + 1]});
    }
    return out;
}

ReturnSeries returns(const PriceSeries& prices) {
    if (prices.size() < 2)
        throw SizeError("need at least 2 prices to compute returns, got " +
                        std::to_string(prices.size()));
    ReturnSeries out;
    out.entries.reserve(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        const double s0 = prices.entries[i].value;
        const double s1 = prices.entries[i + 1].value;
        out.entries.push_back(
            {prices.entries[i].date, std::log(s1 / s0), (s1 - s0) / s0});
    }
    return out;
}

std::string write_prices_csv(const PriceSeries& prices) {
    std::ostringstream os;
    os << "Date,Close\n";
    for (const auto& p : prices.entries)
        os << p.date.to_string() << ',' << fmt12(p.value) << '\n';
    return os.str();
}

} // namespace trend
