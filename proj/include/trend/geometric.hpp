#pragma once

#include "trend/rng.hpp"
#include "trend/signs.hpp"

#include <cstdint>
#include <vector>

namespace trend {

// The memoryless null model for trend durations. theta is the continuation
// probability: the chance the current direction persists one more day.
// P(duration = k) = (1 - theta) * theta^k for k = 0, 1, 2, ...
// For up-trends theta is the up-ratio p; for down-trends it is q = 1 - p.
struct GeometricModel {
    double theta = 0.5;

    double pmf(std::uint64_t k) const;
    double cdf(std::uint64_t k) const; // 1 - theta^(k+1)

    std::vector<std::uint64_t> sample(std::size_t n, std::uint64_t rng_seed) const;
};

// theta restricted to (0, 1); anything else is a degenerate-parameter error.
GeometricModel make_geometric(double theta);

// The sign-count estimator: theta = n_up / (n_up + n_down) for Up,
// n_down / (n_up + n_down) for Down. A single-direction series is degenerate.
GeometricModel estimate_theta_from_signs(const SignSeries& s, Direction direction);

} // namespace trend
