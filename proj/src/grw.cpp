#include "trend/grw.hpp"

#include "trend/errors.hpp"
#include "trend/rng.hpp"

#include <cmath>
#include <string>

namespace trend {

namespace {

void check_sigma(double sigma) {
    if (!(sigma > 0.0))
        throw RangeError("sigma must be positive, got " + std::to_string(sigma));
}

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

} // namespace

double mu_from_rate(double r_f, double sigma) {
    check_sigma(sigma);
    return std::log1p(r_f) - 0.5 * sigma * sigma;
}

double down_probability(double r_f, double sigma) {
    check_sigma(sigma);
    const double arg = sigma / (2.0 * kSqrt2) - std::log1p(r_f) / (sigma * kSqrt2);
    return 0.5 + 0.5 * std::erf(arg);
}

double lognormal_cdf(double u, double mu, double sigma) {
    check_sigma(sigma);
    if (!(u > 0.0))
        throw RangeError("lognormal_cdf requires u > 0, got " + std::to_string(u));
    return 0.5 + 0.5 * std::erf((std::log(u) - mu) / (sigma * kSqrt2));
}

PriceSeries simulate_grw(const GrwParams& params, std::uint64_t rng_seed) {
    check_sigma(params.sigma);
    if (!(params.s0 > 0.0)) throw RangeError("s0 must be positive");
    if (params.r_f < 0.0) throw RangeError("r_f must be nonnegative");
    if (params.t_max < 1) throw SizeError("t_max must be at least 1");

    const double mu = mu_from_rate(params.r_f, params.sigma);
    Rng rng(rng_seed);

    PriceSeries out;
    out.label = "grw";
    out.entries.reserve(params.t_max + 1);
    double value = params.s0;
    out.entries.push_back({Date::ordinal(0), value});
    for (std::size_t t = 1; t <= params.t_max; ++t) {
        value *= std::exp(rng.normal(mu, params.sigma));
        out.entries.push_back({Date::ordinal(static_cast<std::int64_t>(t)), value});
    }
    return out;
}

} // namespace trend
