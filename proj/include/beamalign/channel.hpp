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

#ifndef BEAMALIGN_CHANNEL_HPP
#define BEAMALIGN_CHANNEL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "beamalign/geometry.hpp"
#include "beamalign/rng.hpp"

namespace beamalign {

struct ArrayConfig
{
    int n_tx = 1; // antennas at the transmitter
    int n_rx = 1; // antennas at the receiver

    ArrayConfig() = default;
    ArrayConfig(int tx, int rx) : n_tx(tx), n_rx(rx)
    {
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("ArrayConfig: antenna counts must be >= 1");
    }
};

// Average path powers sigma^2_l, one per path. Non-negativity and finiteness are
// enforced here; normalization to sum 1 is a scenario-level concern (the gain and
// strategy routines are linear in the powers and accept any non-negative profile).
class PathProfile
{
  public:
    explicit PathProfile(std::vector<double> powers) : powers_(std::move(powers))
    {
        if (powers_.empty())
            throw std::invalid_argument("PathProfile: empty power list");
        for (double p : powers_)
            if (!(p >= 0.0) || !std::isfinite(p))
                throw std::invalid_argument("PathProfile: powers must be finite and non-negative");
    }

    std::size_t size() const { return powers_.size(); }
    double operator[](std::size_t l) const { return powers_[l]; }
    const std::vector<double> &powers() const { return powers_; }

    double total() const
    {
        double s = 0.0;
        for (double p : powers_)
            s += p;
        return s;
    }

    friend bool operator==(const PathProfile &a, const PathProfile &b) { return a.powers_ == b.powers_; }

  private:
    std::vector<double> powers_;
};

// instantaneous complex gains alpha_l, one per path
using PathGains = std::vector<std::complex<double>>;

// N_RX x N_TX, indexed (rx antenna/beam, tx antenna/beam)
using ChannelMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Critically-spaced ULA response: entry k = exp(-i pi k cos(angle)) / sqrt(n).
// Unit Euclidean norm by construction.
inline Eigen::VectorXcd steering_vector(int n, double angle)
{
    if (n < 1)
        throw std::invalid_argument("steering_vector: n must be >= 1");
    const double c = std::cos(angle);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXcd a(n);
    for (int k = 0; k < n; ++k)
        a(k) = std::polar(scale, -std::numbers::pi * k * c);
    return a;
}

// alpha_l ~ CN(0, sigma^2_l), independent across paths
inline PathGains sample_path_gains(const PathProfile &profile, Rng &rng)
{
    PathGains gains;
    gains.reserve(profile.size());
    for (double p : profile.powers())
        gains.push_back(rng.complex_gaussian(p));
    return gains;
}

// H = sqrt(N_TX N_RX) sum_l alpha_l a_RX(theta_l) a_TX(phi_l)^H
inline ChannelMatrix synthesize_channel(const ArrayConfig &cfg, const PathAngles &angles, const PathGains &gains)
{
    const std::size_t paths = gains.size();
    if (angles.aods.size() != paths || angles.aoas.size() != paths)
        throw std::invalid_argument("synthesize_channel: angle/gain path count mismatch");
    ChannelMatrix h = ChannelMatrix::Zero(cfg.n_rx, cfg.n_tx);
    const double scale = std::sqrt(static_cast<double>(cfg.n_tx) * static_cast<double>(cfg.n_rx));
    for (std::size_t l = 0; l < paths; ++l)
    {
        const Eigen::VectorXcd a_rx = steering_vector(cfg.n_rx, angles.aoas[l]);
        const Eigen::VectorXcd a_tx = steering_vector(cfg.n_tx, angles.aods[l]);
        h.noalias() += (scale * gains[l]) * (a_rx * a_tx.adjoint());
    }
    return h;
}

} // namespace beamalign

#endif
