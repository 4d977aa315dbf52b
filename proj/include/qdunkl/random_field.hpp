#pragma once

#include <cstdint>
#include <random>

#include "qdunkl/frqdt2d.hpp"
#include "qdunkl/quadrature.hpp"

namespace qdunkl {

// Uniform double in [0, 1) with an explicit bit mapping, so streams are
// byte-identical across standard-library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller on the explicit uniform stream.
double standard_normal(std::mt19937_64& rng);

// Uniformly distributed unit quaternion.
Quaternion random_unit_quaternion(std::mt19937_64& rng);

// Random coefficient matrix with independent standard-normal components.
SpectralCoeffs random_coeffs(int nmax, int mmax, std::mt19937_64& rng);

// Band-limited random field: synthesize(random_coeffs(nmax, mmax)) on the grid.
SampledField random_band_limited(GridPtr grid, int nmax, int mmax, std::uint64_t seed);

} // namespace qdunkl
