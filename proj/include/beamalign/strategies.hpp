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

#ifndef BEAMALIGN_STRATEGIES_HPP
#define BEAMALIGN_STRATEGIES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beamalign/gain.hpp"
#include "beamalign/uncertainty.hpp"

namespace beamalign {

// Beams pre-selected for pilot training on one side, 1-based codebook indices
// ordered by descending selection score (ties broken toward the lower index).
struct BeamSelection
{
    std::vector<int> indices;
    Side side;
};

inline bool operator==(const BeamSelection &a, const BeamSelection &b)
{
    return a.side == b.side && a.indices == b.indices;
}

struct StrategyConfig
{
    int d_tx = 4;                // beams pre-selected at the TX
    int d_rx = 4;                // beams pre-selected at the RX
    int mc_iterations = 1000;    // Monte-Carlo draws per expectation level
    std::uint64_t seed = 1;      // master seed for experiment harnesses

    int budget(Side side) const { return side == Side::tx ? d_tx : d_rx; }
};

enum class Strategy
{
    idealized,
    naive,
    one_step,
    two_step
};

constexpr Strategy all_strategies[] = {Strategy::idealized, Strategy::naive, Strategy::one_step, Strategy::two_step};

inline const char *strategy_name(Strategy s)
{
    switch (s)
    {
    case Strategy::idealized: return "idealized";
    case Strategy::naive: return "naive";
    case Strategy::one_step: return "1step";
    case Strategy::two_step: return "2step";
    }
    throw std::invalid_argument("strategy_name: unknown strategy");
}

inline Strategy strategy_from_name(const std::string &name)
{
    for (Strategy s : all_strategies)
        if (name == strategy_name(s))
            return s;
    if (name == "1-step" || name == "one-step" || name == "onestep")
        return Strategy::one_step;
    if (name == "2-step" || name == "two-step" || name == "twostep")
        return Strategy::two_step;
    throw std::invalid_argument("unknown strategy '" + name + "' (expected idealized, naive, 1step or 2step)");
}

// Per-beam score of one side: the best gain achievable with that beam over all
// beams of the other side. TX beams index gain-matrix columns, RX beams rows.
inline Eigen::VectorXd side_scores(const GainMatrix &g, Side side)
{
    if (side == Side::tx)
        return g.colwise().maxCoeff().transpose();
    return g.rowwise().maxCoeff();
}

// Beam indices (0-based) ordered by descending score, lower index first on ties.
inline std::vector<int> order_by_score(const Eigen::VectorXd &scores)
{
    std::vector<int> idx(static_cast<std::size_t>(scores.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return scores(a) > scores(b) || (scores(a) == scores(b) && a < b); });
    return idx;
}

namespace detail {

inline BeamSelection take_top(const Eigen::VectorXd &scores, Side side, int budget)
{
    if (budget < 1 || budget > scores.size())
        throw std::invalid_argument("beam budget out of range for codebook size");
    const std::vector<int> order = order_by_score(scores);
    BeamSelection sel{{}, side};
    sel.indices.reserve(static_cast<std::size_t>(budget));
    for (int i = 0; i < budget; ++i)
        sel.indices.push_back(order[static_cast<std::size_t>(i)] + 1); // to 1-based
    return sel;
}

// Own-side scores restricted to the other side's predicted beams: for a TX beam,
// the max gain over the predicted RX rows (and transposed for the RX side).
inline Eigen::VectorXd restricted_scores(const GainMatrix &g, Side own, const std::vector<int> &other_rows_or_cols)
{
    const Eigen::Index m = (own == Side::tx) ? g.cols() : g.rows();
    Eigen::VectorXd out = Eigen::VectorXd::Constant(m, 0.0);
    bool first = true;
    for (int other_idx : other_rows_or_cols)
    {
        const Eigen::VectorXd slice =
            (own == Side::tx) ? g.row(other_idx).transpose().eval() : g.col(other_idx).eval();
        out = first ? slice : out.cwiseMax(slice).eval();
        first = false;
    }
    return out;
}

} // namespace detail

// Benchmark with perfect position knowledge at both ends. Scoring each beam by its
// best pairing and truncating is equivalent to the exhaustive subset search for the
// max-over-pairs rate objective, because the top beam on each side participates in
// the globally best pair.
inline std::pair<BeamSelection, BeamSelection> select_idealized(const PositionMatrix &true_pos,
                                                                const PathProfile &profile, const ArrayConfig &arrays,
                                                                const Codebook &cb_tx, const Codebook &cb_rx,
                                                                const StrategyConfig &cfg)
{
    const GainMatrix g = gain_matrix(true_pos, profile, arrays, cb_tx, cb_rx);
    return {detail::take_top(side_scores(g, Side::tx), Side::tx, cfg.d_tx),
            detail::take_top(side_scores(g, Side::rx), Side::rx, cfg.d_rx)};
}

// Local estimate treated as if it were the exact, globally shared positions.
inline BeamSelection select_naive(const NoisyView &view, const PathProfile &profile, const ArrayConfig &arrays,
                                  const Codebook &cb_tx, const Codebook &cb_rx, const StrategyConfig &cfg)
{
    const GainMatrix g = gain_matrix(view.positions, profile, arrays, cb_tx, cb_rx);
    return detail::take_top(side_scores(g, view.side), view.side, cfg.budget(view.side));
}

// 1-step robust pre-selection: average the per-beam scores over Monte-Carlo draws of
// positions compatible with the local estimate, then keep the top beams. Accounts for
// the decision maker's own noise; still assumes the estimate is globally shared.
inline BeamSelection select_one_step(const NoisyView &view, const ErrorModel &model, const PathProfile &profile,
                                     const ArrayConfig &arrays, const Codebook &cb_tx, const Codebook &cb_rx,
                                     const StrategyConfig &cfg, Rng &rng)
{
    if (cfg.mc_iterations < 1)
        throw std::invalid_argument("select_one_step: mc_iterations must be >= 1");
    const Side own = view.side;
    Eigen::VectorXd acc;
    for (int i = 0; i < cfg.mc_iterations; ++i)
    {
        const PositionMatrix truth = sample_conditional_truth(view, model, rng);
        const Eigen::VectorXd s = side_scores(gain_matrix(truth, profile, arrays, cb_tx, cb_rx), own);
        acc = (i == 0) ? s : (acc + s).eval();
    }
    acc /= static_cast<double>(cfg.mc_iterations);
    return detail::take_top(acc, own, cfg.budget(own));
}

// 2-step robust pre-selection. Outer loop: draw positions compatible with the local
// estimate. Inner loop: simulate the estimate the other side would obtain for those
// positions and average its per-beam scores, predicting the other side's (1-step)
// choice. Own beams are then scored only against the predicted beams, so discrepancies
// in estimate quality between the two ends shape the decision.
//
// Own draws come from a dedicated stream and inner draws from per-outer-iteration
// streams, both derived from `rng`; the outer truth sequence is therefore independent
// of the inner sampling (and reproducible on its own), while results stay a pure
// function of the incoming rng state.
inline BeamSelection select_two_step(const NoisyView &view, const ErrorModel &model, const PathProfile &profile,
                                     const ArrayConfig &arrays, const Codebook &cb_tx, const Codebook &cb_rx,
                                     const StrategyConfig &cfg, Rng &rng)
{
    if (cfg.mc_iterations < 1)
        throw std::invalid_argument("select_two_step: mc_iterations must be >= 1");
    const Side own = view.side;
    const Side other = opposite(own);
    const int d_other = cfg.budget(other);

    Rng outer_rng(rng.next_u64());
    const std::uint64_t inner_seed = rng.next_u64();

    Eigen::VectorXd acc;
    for (int i = 0; i < cfg.mc_iterations; ++i)
    {
        const PositionMatrix truth = sample_conditional_truth(view, model, outer_rng);
        const GainMatrix own_gain = gain_matrix(truth, profile, arrays, cb_tx, cb_rx);

        Rng inner_rng(mix_seed(inner_seed, static_cast<std::uint64_t>(i)));
        Eigen::VectorXd other_acc;
        for (int k = 0; k < cfg.mc_iterations; ++k)
        {
            const NoisyView other_view = sample_other_side_view(truth, other, model, inner_rng);
            const Eigen::VectorXd s =
                side_scores(gain_matrix(other_view.positions, profile, arrays, cb_tx, cb_rx), other);
            other_acc = (k == 0) ? s : (other_acc + s).eval();
        }
        const std::vector<int> other_order = order_by_score(other_acc);
        const std::vector<int> predicted(other_order.begin(), other_order.begin() + d_other);

        const Eigen::VectorXd s = detail::restricted_scores(own_gain, own, predicted);
        acc = (i == 0) ? s : (acc + s).eval();
    }
    acc /= static_cast<double>(cfg.mc_iterations);
    return detail::take_top(acc, own, cfg.budget(own));
}

} // namespace beamalign

#endif
