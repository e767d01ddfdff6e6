#pragma once

#include <stdexcept>
#include <string>

namespace trend {

// Base class for everything this library throws on bad input or bad data.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural problems with an input file (bad header, unparseable row).
struct FormatError : Error {
    using Error::Error;
};

// Structurally valid input carrying impossible values (non-positive close,
// duplicate date, CPI month gap).
struct DataError : Error {
    using Error::Error;
};

// A date or index outside the usable range.
struct RangeError : Error {
    using Error::Error;
};

// Input too short for the requested operation.
struct SizeError : Error {
    using Error::Error;
};

// A window (or bootstrap replicate) on which the analysis is undefined:
// single-direction signs, too few uncensorable positions, or a cell
// partition that cannot meet its expected-count floor.
struct DegenerateError : Error {
    using Error::Error;
};

// Monte Carlo calibration failed: too many degenerate replicates.
struct CalibrationError : Error {
    using Error::Error;
};

} // namespace trend
