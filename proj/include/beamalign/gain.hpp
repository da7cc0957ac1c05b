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

#ifndef BEAMALIGN_GAIN_HPP
#define BEAMALIGN_GAIN_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "beamalign/channel.hpp"
#include "beamalign/codebook.hpp"
#include "beamalign/geometry.hpp"
#include "beamalign/rng.hpp"

namespace beamalign {

// M_RX x M_TX average beam gains, entry (q, p) = expected |w_q^H H g_p|^2
using GainMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Fejer-type ULA array gain (1/n) sin^2((pi/2) n d) / sin^2((pi/2) d), where d is a
// difference of angle cosines, d in [-2, 2]. Even in d, periodic with period 2, and
// bounded by n. The singularities d = 0 mod 2 are removable with limit n; the branch
// threshold 1e-9 on |sin((pi/2) d)| keeps the on-grid peak exact, which selection
// tie-breaking relies on.
inline double fejer_gain(int n, double delta)
{
    const double half_pi = 0.5 * std::numbers::pi;
    const double den = std::sin(half_pi * delta);
    if (std::abs(den) < 1e-9)
        return static_cast<double>(n);
    const double num = std::sin(half_pi * n * delta);
    const double ratio = num / den;
    return ratio * ratio / static_cast<double>(n);
}

// Closed-form average beam gain matrix from known path angles:
// G(q, p) = sum_l sigma^2_l * fejer(N_RX, cos(theta_l) - cos(grid_q))
//                           * fejer(N_TX, cos(grid_p) - cos(phi_l))
inline GainMatrix gain_matrix(const PathAngles &angles, const PathProfile &profile, const ArrayConfig &arrays,
                              const Codebook &cb_tx, const Codebook &cb_rx)
{
    const std::size_t paths = profile.size();
    if (angles.aods.size() != paths || angles.aoas.size() != paths)
        throw std::invalid_argument("gain_matrix: path count mismatch between profile and angles");

    const int m_tx = cb_tx.size();
    const int m_rx = cb_rx.size();
    Eigen::MatrixXd rx_terms(m_rx, static_cast<int>(paths)); // weighted by path power
    Eigen::MatrixXd tx_terms(static_cast<int>(paths), m_tx);
    for (std::size_t l = 0; l < paths; ++l)
    {
        const double cos_aoa = std::cos(angles.aoas[l]);
        const double cos_aod = std::cos(angles.aods[l]);
        for (int q = 0; q < m_rx; ++q)
            rx_terms(q, static_cast<int>(l)) =
                profile[l] * fejer_gain(arrays.n_rx, cos_aoa - cb_rx.grid_cosines()[q]);
        for (int p = 0; p < m_tx; ++p)
            tx_terms(static_cast<int>(l), p) = fejer_gain(arrays.n_tx, cb_tx.grid_cosines()[p] - cos_aod);
    }
    return rx_terms * tx_terms;
}

inline GainMatrix gain_matrix(const PositionMatrix &pos, const PathProfile &profile, const ArrayConfig &arrays,
                              const Codebook &cb_tx, const Codebook &cb_rx)
{
    return gain_matrix(path_angles(pos), profile, arrays, cb_tx, cb_rx);
}

// Brute-force estimate of the same matrix: averages |w_q^H H g_p|^2 over independent
// channel realizations synthesized from fresh path-gain draws. Unbiased for any
// sample count; used as the independent check on the closed form.
inline GainMatrix monte_carlo_gain(const PositionMatrix &pos, const PathProfile &profile, const ArrayConfig &arrays,
                                   const Codebook &cb_tx, const Codebook &cb_rx, std::size_t n_samples, Rng &rng)
{
    if (n_samples < 1)
        throw std::invalid_argument("monte_carlo_gain: need at least one sample");
    const PathAngles angles = path_angles(pos);
    if (angles.aods.size() != profile.size())
        throw std::invalid_argument("monte_carlo_gain: path count mismatch between profile and positions");

    const int m_tx = cb_tx.size();
    const int m_rx = cb_rx.size();
    Eigen::MatrixXcd w(arrays.n_rx, m_rx); // combining beams, one per column
    Eigen::MatrixXcd g(arrays.n_tx, m_tx); // precoding beams, one per column
    for (int q = 1; q <= m_rx; ++q)
        w.col(q - 1) = cb_rx.beam_vector(q);
    for (int p = 1; p <= m_tx; ++p)
        g.col(p - 1) = cb_tx.beam_vector(p);

    GainMatrix acc = GainMatrix::Zero(m_rx, m_tx);
    for (std::size_t s = 0; s < n_samples; ++s)
    {
        const PathGains gains = sample_path_gains(profile, rng);
        const ChannelMatrix h = synthesize_channel(arrays, angles, gains);
        const Eigen::MatrixXcd coupled = w.adjoint() * h * g;
        acc += coupled.cwiseAbs2();
    }
    return acc / static_cast<double>(n_samples);
}

} // namespace beamalign

#endif
