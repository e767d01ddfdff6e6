#pragma once

#include "trend/rng.hpp"
#include "trend/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace trend {

// Direction of a one-day price change. A zero change counts as Down, so
// Up/Down is a binary partition of the changes.
enum class Direction : std::uint8_t { Up, Down };

inline Direction opposite(Direction d) {
    return d == Direction::Up ? Direction::Down : Direction::Up;
}

// The per-day sign process of a price series: one entry per consecutive
// price pair, Up iff the later close is strictly greater.
struct SignSeries {
    std::vector<Direction> signs;
    std::size_t n_up = 0;
    std::size_t n_down = 0;

    std::size_t size() const { return signs.size(); }

    static SignSeries from_signs(std::vector<Direction> s);
};

// A maximal same-direction segment of the sign series.
struct Run {
    Direction direction;
    std::size_t start = 0; // trading-day ordinal of the first change
    std::size_t duration = 0;
};

// What to do with a draw whose run is cut off by the end of the series:
// discard and redraw (the default), or keep the truncated duration.
enum class CensorPolicy : std::uint8_t { Discard, KeepTruncated };

// Histogram of sampled trend durations for one direction.
struct WaitingTimeSample {
    Direction direction = Direction::Up;
    std::vector<std::uint32_t> counts; // counts[k] = draws with duration k
    std::uint64_t n = 0;               // total draws kept

    double frequency(std::size_t k) const {
        if (k >= counts.size() || n == 0) return 0.0;
        return static_cast<double>(counts[k]) / static_cast<double>(n);
    }
};

SignSeries signs(const PriceSeries& prices);

// Maximal runs in order; concatenating them reproduces the sign series.
std::vector<Run> runs(const SignSeries& s);

// Number of consecutive `direction` signs at positions i, i+1, ... before
// the first opposite sign or the end of the series. `position` is 1-based;
// 0 if the sign at `position` is opposite.
std::size_t waiting_time_at(const SignSeries& s, std::size_t position,
                            Direction direction);

// Draws n_points positions uniformly at random with replacement and records
// the waiting time at each. Under the Discard policy, draws whose run is cut
// by the series end are redrawn; if fewer than 1% of positions could yield
// an uncensored draw the window is degenerate. Deterministic per seed.
WaitingTimeSample sample_waiting_times(const SignSeries& s, Direction direction,
                                       std::size_t n_points, std::uint64_t rng_seed,
                                       CensorPolicy policy = CensorPolicy::Discard);

// Core sampling loop shared by the public API and the bootstrap kernel.
// Appends to `counts` (which must be zeroed up to max_k on entry) and
// updates max_k to the largest duration recorded. Throws DegenerateError
// under the same conditions as sample_waiting_times.
void sample_waiting_times_into(std::span<const Direction> signs, Direction direction,
                               std::size_t n_points, CensorPolicy policy, Rng& rng,
                               std::vector<std::uint32_t>& counts, std::size_t& max_k);

// Histogram export, header "k,count,frequency".
std::string write_histogram_csv(const WaitingTimeSample& sample);

} // namespace trend
