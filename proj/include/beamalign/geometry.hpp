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

#ifndef BEAMALIGN_GEOMETRY_HPP
#define BEAMALIGN_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace beamalign {

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point2 &a, const Point2 &b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point2 &a, const Point2 &b) { return !(a == b); }
inline Point2 operator+(const Point2 &a, const Point2 &b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2 &a, const Point2 &b) { return {a.x - b.x, a.y - b.y}; }

inline double norm(const Point2 &p) { return std::hypot(p.x, p.y); }

inline bool is_finite(const Point2 &p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Node coordinates in the fixed column order [TX, R_1, ..., R_{L-1}, RX].
// L = number of propagation paths: one direct TX-RX path plus one per reflector
// (reflectors are point scatterers, no specular law is enforced).
class PositionMatrix
{
  public:
    PositionMatrix(Point2 tx, std::vector<Point2> reflectors, Point2 rx)
        : tx_(tx), reflectors_(std::move(reflectors)), rx_(rx)
    {
        if (!is_finite(tx_) || !is_finite(rx_))
            throw std::invalid_argument("PositionMatrix: non-finite endpoint coordinates");
        if (tx_ == rx_)
            throw std::invalid_argument("PositionMatrix: TX and RX coincide");
        for (std::size_t i = 0; i < reflectors_.size(); ++i)
        {
            if (!is_finite(reflectors_[i]))
                throw std::invalid_argument("PositionMatrix: non-finite reflector " + std::to_string(i + 1));
            if (reflectors_[i] == tx_ || reflectors_[i] == rx_)
                throw std::invalid_argument("PositionMatrix: reflector " + std::to_string(i + 1) +
                                            " coincides with an endpoint");
        }
    }

    // column order [TX, R_1, ..., R_{L-1}, RX]
    static PositionMatrix from_nodes(const std::vector<Point2> &nodes)
    {
        if (nodes.size() < 2)
            throw std::invalid_argument("PositionMatrix: need at least TX and RX nodes");
        return PositionMatrix(nodes.front(), {nodes.begin() + 1, nodes.end() - 1}, nodes.back());
    }

    const Point2 &tx() const { return tx_; }
    const Point2 &rx() const { return rx_; }
    const std::vector<Point2> &reflectors() const { return reflectors_; }

    std::size_t num_paths() const { return reflectors_.size() + 1; } // L
    std::size_t num_nodes() const { return reflectors_.size() + 2; } // L + 1

    const Point2 &node(std::size_t i) const
    {
        if (i == 0)
            return tx_;
        if (i + 1 == num_nodes())
            return rx_;
        return reflectors_[i - 1];
    }

    std::vector<Point2> nodes() const
    {
        std::vector<Point2> out;
        out.reserve(num_nodes());
        out.push_back(tx_);
        out.insert(out.end(), reflectors_.begin(), reflectors_.end());
        out.push_back(rx_);
        return out;
    }

    friend bool operator==(const PositionMatrix &a, const PositionMatrix &b)
    {
        return a.tx_ == b.tx_ && a.rx_ == b.rx_ && a.reflectors_ == b.reflectors_;
    }

  private:
    Point2 tx_;
    std::vector<Point2> reflectors_;
    Point2 rx_;
};

// Departure and arrival angles per path, entry 0 = direct path, entry i = reflector R_i.
struct PathAngles
{
    std::vector<double> aods; // at the TX, radians in [0, pi]
    std::vector<double> aoas; // at the RX, radians in [0, pi]
};

// Angle between the line through p and q and the vertical line through q,
// expressed against the horizontal so the result lies in [0, pi]:
// pi/2 - arctan((p.x - q.x) / (p.y - q.y)), with the lower half-plane folded up.
// The horizontal limit p.y == q.y resolves to 0 (p east of q) or pi (p west of q).
inline double angle_to_vertical(const Point2 &p, const Point2 &q)
{
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    if (dx == 0.0 && dy == 0.0)
        throw std::invalid_argument("angle_to_vertical: coincident points");
    if (dy < 0.0)
    {
        dx = -dx;
        dy = -dy;
    }
    return std::atan2(dy, dx); // dy >= 0, so in [0, pi]
}

// AoD of path l is measured at the TX toward {RX, R_l}; AoA at the RX toward {TX, R_l}.
inline PathAngles path_angles(const PositionMatrix &pos)
{
    PathAngles out;
    out.aods.reserve(pos.num_paths());
    out.aoas.reserve(pos.num_paths());
    out.aods.push_back(angle_to_vertical(pos.rx(), pos.tx()));
    out.aoas.push_back(angle_to_vertical(pos.tx(), pos.rx()));
    for (const Point2 &r : pos.reflectors())
    {
        out.aods.push_back(angle_to_vertical(r, pos.tx()));
        out.aoas.push_back(angle_to_vertical(r, pos.rx()));
    }
    return out;
}

} // namespace beamalign

#endif
