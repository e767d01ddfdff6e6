#pragma once

#include "trend/series.hpp"

#include <string>
#include <vector>

namespace trend {

// Parses a daily price CSV. The header must name a Date and a Close column
// (the Yahoo-style "Date,Open,High,Low,Close,Adj Close,Volume" layout and
// the canonical "Date,Close" layout both qualify). Rows are sorted by date;
// a missing, non-numeric, or non-positive Close and duplicate dates are
// data errors naming the offending row.
PriceSeries parse_prices(const std::string& csv_text, const std::string& label);

// Parses a monthly CPI CSV with header "Month,Value", Month = YYYY-MM.
// The months must be consecutive; a gap is an error naming the missing month.
CpiSeries parse_cpi(const std::string& csv_text);

// Daily CPI by linear interpolation between month anchors. Each month's
// value is anchored to its first calendar day; the interpolation parameter
// is the calendar-day offset within the month. Every requested date must
// lie in [first anchor, last anchor].
std::vector<double> interpolate_cpi_daily(const CpiSeries& cpi,
                                          const std::vector<Date>& dates);

// Rescales prices to constant money of base_date:
// out(t) = in(t) * CPI(base_date) / CPI(t).
PriceSeries deflate(const PriceSeries& prices, const CpiSeries& cpi,
                    const Date& base_date);

// Log and simple one-day returns. Requires at least two prices.
ReturnSeries returns(const PriceSeries& prices);

// Canonical "Date,Close" writer; output re-parses with parse_prices.
std::string write_prices_csv(const PriceSeries& prices);

} // namespace trend
