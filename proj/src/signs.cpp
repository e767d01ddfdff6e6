#include "trend/signs.hpp"

#include "trend/errors.hpp"

#include <cstdio>
#include <sstream>

namespace trend {

SignSeries SignSeries::from_signs(std::vector<Direction> s) {
    SignSeries out;
    out.signs = std::move(s);
    for (Direction d : out.signs)
        (d == Direction::Up ? out.n_up : out.n_down) += 1;
    return out;
}

SignSeries signs(const PriceSeries& prices) {
    if (prices.size() < 2)
        throw SizeError("need at least 2 prices to compute signs, got " +
                        std::to_string(prices.size()));
    SignSeries out;
    out.signs.reserve(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        const bool up = prices.entries[i + 1].value > prices.entries[i].value;
        out.signs.push_back(up ? Direction::Up : Direction::Down);
        (up ? out.n_up : out.n_down) += 1;
    }
    return out;
}

std::vector<Run> runs(const SignSeries& s) {
    if (s.signs.empty()) throw SizeError("empty sign series has no runs");
    std::vector<Run> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.signs.size(); ++i) {
        if (i == s.signs.size() || s.signs[i] != s.signs[start]) {
            out.push_back({s.signs[start], start, i - start});
            start = i;
        }
    }
    return out;
}

std::size_t waiting_time_at(const SignSeries& s, std::size_t position,
                            Direction direction) {
    if (position < 1 || position > s.signs.size())
        throw RangeError("position " + std::to_string(position) +
                         " outside [1, " + std::to_string(s.signs.size()) + "]");
    const std::size_t i = position - 1;
    std::size_t j = i;
    while (j < s.signs.size() && s.signs[j] == direction) ++j;
    return j - i;
}

void sample_waiting_times_into(std::span<const Direction> signs, Direction direction,
                               std::size_t n_points, CensorPolicy policy, Rng& rng,
                               std::vector<std::uint32_t>& counts, std::size_t& max_k) {
    const std::size_t len = signs.size();
    if (len == 0) throw SizeError("cannot sample waiting times from an empty sign series");
    if (n_points == 0) throw SizeError("n_points must be positive");

    if (policy == CensorPolicy::Discard) {
        // Only positions inside a final run of the sampled direction censor.
        std::size_t tail_run = 0;
        while (tail_run < len && signs[len - 1 - tail_run] == direction) ++tail_run;
        const std::size_t eligible = len - tail_run;
        if (eligible * 100 < len)
            throw DegenerateError("fewer than 1% of positions can yield an uncensored draw");
    }

    if (counts.size() < len + 1) counts.resize(len + 1, 0);
    for (std::size_t drawn = 0; drawn < n_points;) {
        const std::size_t i = rng.uniform_index(len);
        std::size_t j = i;
        while (j < len && signs[j] == direction) ++j;
        if (j == len && policy == CensorPolicy::Discard) continue; // censored: redraw
        const std::size_t k = j - i;
        counts[k] += 1;
        if (k > max_k) max_k = k;
        ++drawn;
    }
}

WaitingTimeSample sample_waiting_times(const SignSeries& s, Direction direction,
                                       std::size_t n_points, std::uint64_t rng_seed,
                                       CensorPolicy policy) {
    Rng rng(rng_seed);
    WaitingTimeSample out;
    out.direction = direction;
    std::size_t max_k = 0;
    sample_waiting_times_into(s.signs, direction, n_points, policy, rng, out.counts, max_k);
    out.counts.resize(max_k + 1);
    out.n = n_points;
    return out;
}

std::string write_histogram_csv(const WaitingTimeSample& sample) {
    std::ostringstream os;
    os << "k,count,frequency\n";
    char buf[40];
    for (std::size_t k = 0; k < sample.counts.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.12g", sample.frequency(k));
        os << k << ',' << sample.counts[k] << ',' << buf << '\n';
    }
    return os.str();
}

} // namespace trend
