// SPDX-License-Identifier: Apache-2.0
//
// beamalign - location-aided beam pre-selection for mmWave massive MIMO
// Copyright (C) 2026 beamalign contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#ifndef BEAMALIGN_RNG_HPP
#define BEAMALIGN_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace beamalign {

// splitmix64 finalizer; derives independent seed streams from (seed, tag) pairs.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded random source. The engine is std::mt19937_64 (its raw output sequence
// is fixed by the standard); the uniform/normal mappings are done here so that
// draw sequences are identical across platforms and standard-library versions.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // standard normal, Box-Muller; the second value of each pair is cached
    double normal()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1)); // log(1-u1), safe since u1 < 1
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double stddev) { return stddev * normal(); }

    // circularly-symmetric complex Gaussian CN(0, variance):
    // real and imaginary parts each N(0, variance/2)
    std::complex<double> complex_gaussian(double variance)
    {
        const double s = std::sqrt(0.5 * variance);
        return {s * normal(), s * normal()};
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace beamalign

#endif
