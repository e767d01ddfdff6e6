#pragma once

#include "trend/date.hpp"

#include <string>
#include <vector>

namespace trend {

struct PricePoint {
    Date date;
    double value = 0.0;
};

// Dated sequence of daily closing values, nominal or deflated.
// Invariants (enforced by the parsers and constructors that build one):
// dates strictly increasing, every value > 0.
struct PriceSeries {
    std::string label;
    std::vector<PricePoint> entries;

    std::size_t size() const { return entries.size(); }
};

struct CpiEntry {
    YearMonth month;
    double value = 0.0;
};

// Gap-free monthly consumer price index levels, strictly increasing months.
struct CpiSeries {
    std::vector<CpiEntry> entries;

    std::size_t size() const { return entries.size(); }
};

struct ReturnEntry {
    Date date; // date of the earlier close of the pair
    double log_return = 0.0;
    double simple_return = 0.0;
};

// One-trading-day returns; length = price series length - 1.
struct ReturnSeries {
    std::vector<ReturnEntry> entries;

    std::size_t size() const { return entries.size(); }
};

} // namespace trend
