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

#ifndef BEAMALIGN_UNCERTAINTY_HPP
#define BEAMALIGN_UNCERTAINTY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamalign/geometry.hpp"
#include "beamalign/rng.hpp"

namespace beamalign {

enum class Side
{
    tx,
    rx
};

inline Side opposite(Side s) { return s == Side::tx ? Side::rx : Side::tx; }

inline const char *side_name(Side s) { return s == Side::tx ? "tx" : "rx"; }

// Per-node position-error radii as seen from each side, in the node-column order
// [TX, R_1, ..., R_{L-1}, RX]. Estimates are uniform on the closed disk of the
// given radius around the true position. The TX (base station) is static and its
// position is known perfectly everywhere, so both TX-column radii must be zero.
class ErrorModel
{
  public:
    ErrorModel(std::vector<double> radii_tx, std::vector<double> radii_rx)
        : radii_tx_(std::move(radii_tx)), radii_rx_(std::move(radii_rx))
    {
        if (radii_tx_.size() != radii_rx_.size())
            throw std::invalid_argument("ErrorModel: per-side radii lists differ in length");
        if (radii_tx_.size() < 2)
            throw std::invalid_argument("ErrorModel: need radii for at least TX and RX nodes");
        for (std::size_t i = 0; i < radii_tx_.size(); ++i)
        {
            if (!(radii_tx_[i] >= 0.0) || !std::isfinite(radii_tx_[i]) || !(radii_rx_[i] >= 0.0) ||
                !std::isfinite(radii_rx_[i]))
                throw std::invalid_argument("ErrorModel: radius for node " + std::to_string(i) +
                                            " must be finite and non-negative");
        }
        if (radii_tx_[0] != 0.0 || radii_rx_[0] != 0.0)
            throw std::invalid_argument("ErrorModel: TX-column radii must be zero on both sides");
    }

    const std::vector<double> &radii(Side side) const { return side == Side::tx ? radii_tx_ : radii_rx_; }
    std::size_t num_nodes() const { return radii_tx_.size(); }

    friend bool operator==(const ErrorModel &a, const ErrorModel &b)
    {
        return a.radii_tx_ == b.radii_tx_ && a.radii_rx_ == b.radii_rx_;
    }

  private:
    std::vector<double> radii_tx_;
    std::vector<double> radii_rx_;
};

// The position matrix as estimated by one side.
struct NoisyView
{
    PositionMatrix positions;
    Side side;
};

// Uniform draw from the closed disk of the given radius, by inverse CDF in polar
// coordinates (radius r*sqrt(u), angle 2*pi*v). Always consumes exactly two
// uniforms, so draw sequences stay aligned when some radii are zero.
inline Point2 sample_disk(double radius, Rng &rng)
{
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("sample_disk: radius must be finite and non-negative");
    const double r = radius * std::sqrt(rng.uniform());
    const double a = 2.0 * std::numbers::pi * rng.uniform();
    return {r * std::cos(a), r * std::sin(a)};
}

namespace detail {

// positions + sign * (one disk draw per node with that node's radius)
inline PositionMatrix perturb_nodes(const PositionMatrix &positions, const std::vector<double> &radii, double sign,
                                    Rng &rng)
{
    if (radii.size() != positions.num_nodes())
        throw std::invalid_argument("ErrorModel/positions node count mismatch");
    std::vector<Point2> nodes = positions.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        const Point2 e = sample_disk(radii[i], rng);
        nodes[i] = {nodes[i].x + sign * e.x, nodes[i].y + sign * e.y};
    }
    return PositionMatrix::from_nodes(nodes);
}

} // namespace detail

// The estimate held by `side`: truth plus a fresh error drawn from that side's radii.
inline NoisyView make_noisy_view(const PositionMatrix &true_pos, const ErrorModel &model, Side side, Rng &rng)
{
    return {detail::perturb_nodes(true_pos, model.radii(side), +1.0, rng), side};
}

// A position matrix compatible with the view: the view minus a fresh error drawn from
// the viewing side's radii. Approximates a draw of the truth given the estimate, which
// is exact here because the disk errors are zero-mean and symmetric.
inline PositionMatrix sample_conditional_truth(const NoisyView &view, const ErrorModel &model, Rng &rng)
{
    return detail::perturb_nodes(view.positions, model.radii(view.side), -1.0, rng);
}

// The estimate the other side would hold if `hypothetical_truth` were the real
// positions: truth plus a fresh error from that other side's radii.
inline NoisyView sample_other_side_view(const PositionMatrix &hypothetical_truth, Side other_side,
                                        const ErrorModel &model, Rng &rng)
{
    return {detail::perturb_nodes(hypothetical_truth, model.radii(other_side), +1.0, rng), other_side};
}

} // namespace beamalign

#endif
