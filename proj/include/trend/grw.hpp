#pragma once

#include "trend/series.hpp"

#include <cstdint>

namespace trend {

// Log-normal geometric random walk with risk-free drift: the efficient-market
// null model. Daily step factors Q are log-normal(mu, sigma) with mu tied to
// the rate so that E(Q) = 1 + r_f (prices form a martingale at r_f = 0).
struct GrwParams {
    double s0 = 100.0;     // initial price
    double sigma = 0.01;   // log-step standard deviation per day
    double r_f = 0.0;      // risk-free rate per day
    std::size_t t_max = 0; // number of steps
};

// mu = log(1 + r_f) - sigma^2 / 2. Note mu < log(1 + r_f) always: a price
// martingale has a strictly drifting log-price.
double mu_from_rate(double r_f, double sigma);

// Probability that a daily change is non-positive under the model:
// F_Q(1) = 1/2 + 1/2 erf(sigma/(2 sqrt 2) - log(1+r_f)/(sigma sqrt 2)).
double down_probability(double r_f, double sigma);

// Log-normal CDF, F(u) = 1/2 + 1/2 erf((log u - mu) / (sigma sqrt 2)).
double lognormal_cdf(double u, double mu, double sigma);

// Simulates S(t) = s0 * prod Q_i for t = 0..t_max with ordinal pseudo-dates,
// so the output flows through the same pipeline as real data.
PriceSeries simulate_grw(const GrwParams& params, std::uint64_t rng_seed);

} // namespace trend
