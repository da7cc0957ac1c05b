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

#ifndef BEAMALIGN_CODEBOOK_HPP
#define BEAMALIGN_CODEBOOK_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "beamalign/channel.hpp"

namespace beamalign {

// Steering-vector beam codebook for one ULA side. Grid angles are spaced by the
// inverse cosine, angle_p = arccos(1 - 2(p-1)/(M-1)), so their cosines form an
// arithmetic sequence from 1 down to -1 and adjacent beams lose near-equal gain
// at the crossover regardless of pointing direction. Beam indices are 1-based.
class Codebook
{
  public:
    Codebook(int num_beams, int num_antennas) : n_(num_antennas)
    {
        if (num_beams < 2)
            throw std::invalid_argument("Codebook: need at least 2 beams");
        if (num_antennas < 1)
            throw std::invalid_argument("Codebook: need at least 1 antenna");
        cosines_.reserve(num_beams);
        angles_.reserve(num_beams);
        for (int p = 1; p <= num_beams; ++p)
        {
            const double c = 1.0 - 2.0 * (p - 1) / static_cast<double>(num_beams - 1);
            cosines_.push_back(c);
            angles_.push_back(std::acos(c));
        }
    }

    int size() const { return static_cast<int>(angles_.size()); } // M
    int antennas() const { return n_; }

    double grid_angle(int index) const { return angles_[checked(index)]; }
    double grid_cosine(int index) const { return cosines_[checked(index)]; }

    const std::vector<double> &grid_angles() const { return angles_; }
    const std::vector<double> &grid_cosines() const { return cosines_; }

    Eigen::VectorXcd beam_vector(int index) const { return steering_vector(n_, angles_[checked(index)]); }

  private:
    std::size_t checked(int index) const
    {
        if (index < 1 || index > size())
            throw std::out_of_range("Codebook: beam index out of range");
        return static_cast<std::size_t>(index - 1);
    }

    int n_;
    std::vector<double> angles_;  // ascending in [0, pi]
    std::vector<double> cosines_; // descending from 1 to -1
};

} // namespace beamalign

#endif
