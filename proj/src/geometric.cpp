#include "trend/geometric.hpp"

#include "trend/errors.hpp"

#include <cmath>
#include <string>

namespace trend {

GeometricModel make_geometric(double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw DegenerateError("geometric parameter must lie strictly in (0,1), got " +
                              std::to_string(theta));
    return GeometricModel{theta};
}

double GeometricModel::pmf(std::uint64_t k) const {
    return (1.0 - theta) * std::pow(theta, static_cast<double>(k));
}

double GeometricModel::cdf(std::uint64_t k) const {
    return 1.0 - std::pow(theta, static_cast<double>(k + 1));
}

std::vector<std::uint64_t> GeometricModel::sample(std::size_t n,
                                                  std::uint64_t rng_seed) const {
    Rng rng(rng_seed);
    std::vector<std::uint64_t> out(n);
    for (auto& k : out) k = rng.geometric(theta);
    return out;
}

GeometricModel estimate_theta_from_signs(const SignSeries& s, Direction direction) {
    const std::size_t total = s.n_up + s.n_down;
    if (total == 0) throw SizeError("cannot estimate theta from an empty sign series");
    const std::size_t hits = direction == Direction::Up ? s.n_up : s.n_down;
    if (hits == 0 || hits == total)
        throw DegenerateError("single-direction window: theta estimate would be " +
                              std::string(hits == 0 ? "0" : "1"));
    return GeometricModel{static_cast<double>(hits) / static_cast<double>(total)};
}

} // namespace trend
