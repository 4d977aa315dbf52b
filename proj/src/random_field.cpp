#include "qdunkl/random_field.hpp"

#include <cmath>
#include <numbers>

namespace qdunkl {

double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Quaternion random_unit_quaternion(std::mt19937_64& rng) {
    Quaternion q;
    do {
        q = {standard_normal(rng), standard_normal(rng), standard_normal(rng),
             standard_normal(rng)};
    } while (q.norm() < 1e-6);
    return q / q.norm();
}

SpectralCoeffs random_coeffs(int nmax, int mmax, std::mt19937_64& rng) {
    SpectralCoeffs coeffs(nmax, mmax);
    for (Quaternion& q : coeffs.c)
        q = {standard_normal(rng), standard_normal(rng), standard_normal(rng),
             standard_normal(rng)};
    return coeffs;
}

SampledField random_band_limited(GridPtr grid, int nmax, int mmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return synthesize(random_coeffs(nmax, mmax, rng), std::move(grid));
}

} // namespace qdunkl
