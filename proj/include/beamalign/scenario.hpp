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

#ifndef BEAMALIGN_SCENARIO_HPP
#define BEAMALIGN_SCENARIO_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "beamalign/channel.hpp"
#include "beamalign/geometry.hpp"
#include "beamalign/strategies.hpp"
#include "beamalign/uncertainty.hpp"

namespace beamalign {

// Sweep axis for experiments: either the SNR in dB at fixed beam budgets, or the
// per-side beam budget D at fixed SNR.
struct SweepSpec
{
    enum class Axis
    {
        snr_db,
        beams
    };

    Axis axis = Axis::snr_db;
    std::vector<double> values;
    std::string source; // the spec string this was parsed from

    // "snr:<lo>:<hi>:<step>" or "d:<lo>:<hi>"
    static SweepSpec parse(const std::string &text)
    {
        std::vector<std::string> tok;
        std::string part;
        std::istringstream in(text);
        while (std::getline(in, part, ':'))
            tok.push_back(part);

        const auto fail = [&](const std::string &why) {
            throw std::invalid_argument("invalid sweep '" + text + "': " + why +
                                        " (expected snr:<lo>:<hi>:<step> or d:<lo>:<hi>)");
        };
        const auto num = [&](const std::string &s) {
            try
            {
                std::size_t used = 0;
                const double v = std::stod(s, &used);
                if (used != s.size() || !std::isfinite(v))
                    fail("bad number '" + s + "'");
                return v;
            }
            catch (const std::invalid_argument &)
            {
                fail("bad number '" + s + "'");
            }
            catch (const std::out_of_range &)
            {
                fail("bad number '" + s + "'");
            }
            return 0.0; // unreachable
        };

        SweepSpec spec;
        spec.source = text;
        if (tok.empty())
            fail("empty spec");
        if (tok[0] == "snr")
        {
            if (tok.size() != 4)
                fail("snr sweep takes lo:hi:step");
            spec.axis = Axis::snr_db;
            const double lo = num(tok[1]), hi = num(tok[2]), step = num(tok[3]);
            if (step <= 0.0)
                fail("step must be positive");
            if (hi < lo)
                fail("hi must be >= lo");
            const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
            for (int i = 0; i < count; ++i)
                spec.values.push_back(lo + i * step);
        }
        else if (tok[0] == "d")
        {
            if (tok.size() != 3)
                fail("d sweep takes lo:hi");
            spec.axis = Axis::beams;
            const double lo = num(tok[1]), hi = num(tok[2]);
            if (lo != std::floor(lo) || hi != std::floor(hi))
                fail("beam counts must be integers");
            if (lo < 1)
                fail("beam counts start at 1");
            if (hi < lo)
                fail("hi must be >= lo");
            for (double v = lo; v <= hi; v += 1.0)
                spec.values.push_back(v);
        }
        else
        {
            fail("unknown axis '" + tok[0] + "'");
        }
        return spec;
    }

    const std::string &str() const { return source; }

    friend bool operator==(const SweepSpec &a, const SweepSpec &b)
    {
        return a.axis == b.axis && a.values == b.values && a.source == b.source;
    }
};

// Built-in precision settings: per-node error radii for each side plus the average
// path-power profile they are quoted with.
struct NamedParameterSet
{
    std::string name;
    std::vector<double> radii_tx; // node order [TX, R_1, R_2, RX]
    std::vector<double> radii_rx;
    std::vector<double> path_powers;
};

inline const std::vector<NamedParameterSet> &builtin_parameter_sets()
{
    static const std::vector<NamedParameterSet> sets = {
        // stronger direct path, looser localization
        {"params-A", {0.0, 11.0, 15.0, 13.0}, {0.0, 18.0, 17.0, 7.0}, {0.4, 0.3, 0.3}},
        // blocked direct path, tighter localization
        {"params-B", {0.0, 8.0, 18.0, 7.0}, {0.0, 11.0, 8.0, 3.0}, {0.0, 0.5, 0.5}},
    };
    return sets;
}

inline const NamedParameterSet *find_parameter_set(const std::string &name)
{
    for (const NamedParameterSet &s : builtin_parameter_sets())
        if (s.name == name)
            return &s;
    return nullptr;
}

// Full experiment description: geometry, path powers, array and codebook sizes,
// error radii, strategy configuration, and the default sweep.
struct Scenario
{
    std::string name; // optional built-in parameter-set label, "" for custom
    PositionMatrix positions;
    PathProfile profile;
    ArrayConfig arrays;
    int m_tx = 64;
    int m_rx = 64;
    ErrorModel errors;
    StrategyConfig strategy;
    double snr_db = 10.0; // used when the sweep axis is the beam budget
    SweepSpec sweep;

    friend bool operator==(const Scenario &a, const Scenario &b)
    {
        return a.name == b.name && a.positions == b.positions && a.profile == b.profile &&
               a.arrays.n_tx == b.arrays.n_tx && a.arrays.n_rx == b.arrays.n_rx && a.m_tx == b.m_tx &&
               a.m_rx == b.m_rx && a.errors == b.errors && a.strategy.d_tx == b.strategy.d_tx &&
               a.strategy.d_rx == b.strategy.d_rx && a.strategy.mc_iterations == b.strategy.mc_iterations &&
               a.strategy.seed == b.strategy.seed && a.snr_db == b.snr_db && a.sweep == b.sweep;
    }
};

// Default setup: 100 m link on the x axis with one reflector above and one below
// the direct line (the reflector coordinates are artifact defaults, not measured
// values), 64-antenna ULAs, 64-beam codebooks, params-A precision.
inline Scenario default_scenario()
{
    const NamedParameterSet &set = *find_parameter_set("params-A");
    return Scenario{"params-A",
                    PositionMatrix({0.0, 0.0}, {{50.0, 40.0}, {45.0, -30.0}}, {100.0, 0.0}),
                    PathProfile(set.path_powers),
                    ArrayConfig(64, 64),
                    64,
                    64,
                    ErrorModel(set.radii_tx, set.radii_rx),
                    StrategyConfig{4, 4, 1000, 1},
                    10.0,
                    SweepSpec::parse("snr:-10:30:5")};
}

namespace detail {

inline void check_known_keys(const nlohmann::json &j)
{
    static const char *known[] = {"name",     "tx",   "reflectors", "rx",   "path_powers",   "n_tx",
                                  "n_rx",     "m_tx", "m_rx",       "radii_tx", "radii_rx",  "d_tx",
                                  "d_rx",     "mc_iterations",      "seed", "snr_db",        "sweep"};
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        bool ok = false;
        for (const char *k : known)
            if (it.key() == k)
            {
                ok = true;
                break;
            }
        if (!ok)
            throw std::invalid_argument("scenario: unknown field '" + it.key() + "'");
    }
}

inline Point2 point_field(const nlohmann::json &j, const std::string &field, Point2 fallback)
{
    if (!j.contains(field))
        return fallback;
    const auto &v = j.at(field);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw std::invalid_argument("scenario." + field + ": expected [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

inline std::vector<double> number_list(const nlohmann::json &v, const std::string &field)
{
    if (!v.is_array())
        throw std::invalid_argument("scenario." + field + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (!v[i].is_number())
            throw std::invalid_argument("scenario." + field + "[" + std::to_string(i) + "]: expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

template <typename T>
inline T scalar_field(const nlohmann::json &j, const std::string &field, T fallback)
{
    if (!j.contains(field))
        return fallback;
    const auto &v = j.at(field);
    if constexpr (std::is_same_v<T, std::string>)
    {
        if (!v.is_string())
            throw std::invalid_argument("scenario." + field + ": expected a string");
    }
    else
    {
        if (!v.is_number())
            throw std::invalid_argument("scenario." + field + ": expected a number");
    }
    return v.get<T>();
}

} // namespace detail

// Unset fields fall back to the defaults of default_scenario(); a "name" field first
// swaps in that built-in set's radii and path powers. All invariants are validated
// and violations are reported with the offending field.
inline Scenario scenario_from_json(const nlohmann::json &j)
{
    if (!j.is_object())
        throw std::invalid_argument("scenario: expected a JSON object");
    detail::check_known_keys(j);

    Scenario base = default_scenario();
    const std::string name = detail::scalar_field<std::string>(j, "name", "");
    std::vector<double> powers = base.profile.powers();
    std::vector<double> radii_tx = base.errors.radii(Side::tx);
    std::vector<double> radii_rx = base.errors.radii(Side::rx);
    if (!name.empty())
    {
        const NamedParameterSet *set = find_parameter_set(name);
        if (set == nullptr)
            throw std::invalid_argument("scenario.name: unknown parameter set '" + name +
                                        "' (built-ins: params-A, params-B)");
        powers = set->path_powers;
        radii_tx = set->radii_tx;
        radii_rx = set->radii_rx;
    }

    const Point2 tx = detail::point_field(j, "tx", base.positions.tx());
    const Point2 rx = detail::point_field(j, "rx", base.positions.rx());
    std::vector<Point2> reflectors = base.positions.reflectors();
    if (j.contains("reflectors"))
    {
        if (!j.at("reflectors").is_array())
            throw std::invalid_argument("scenario.reflectors: expected an array of [x, y] pairs");
        reflectors.clear();
        for (std::size_t i = 0; i < j.at("reflectors").size(); ++i)
            reflectors.push_back(detail::point_field(j.at("reflectors"), std::to_string(i), {0, 0}));
    }

    if (j.contains("path_powers"))
        powers = detail::number_list(j.at("path_powers"), "path_powers");
    if (j.contains("radii_tx"))
        radii_tx = detail::number_list(j.at("radii_tx"), "radii_tx");
    if (j.contains("radii_rx"))
        radii_rx = detail::number_list(j.at("radii_rx"), "radii_rx");

    const int n_tx = detail::scalar_field<int>(j, "n_tx", base.arrays.n_tx);
    const int n_rx = detail::scalar_field<int>(j, "n_rx", base.arrays.n_rx);
    const int m_tx = detail::scalar_field<int>(j, "m_tx", base.m_tx);
    const int m_rx = detail::scalar_field<int>(j, "m_rx", base.m_rx);
    const int d_tx = detail::scalar_field<int>(j, "d_tx", base.strategy.d_tx);
    const int d_rx = detail::scalar_field<int>(j, "d_rx", base.strategy.d_rx);
    const int mc_iterations = detail::scalar_field<int>(j, "mc_iterations", base.strategy.mc_iterations);
    const std::uint64_t seed = detail::scalar_field<std::uint64_t>(j, "seed", base.strategy.seed);
    const double snr_db = detail::scalar_field<double>(j, "snr_db", base.snr_db);
    const std::string sweep_str = detail::scalar_field<std::string>(j, "sweep", base.sweep.str());

    const std::size_t num_paths = reflectors.size() + 1;
    if (powers.size() != num_paths)
        throw std::invalid_argument("scenario.path_powers: expected " + std::to_string(num_paths) +
                                    " entries (one per path), got " + std::to_string(powers.size()));
    double total = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i)
    {
        if (!(powers[i] >= 0.0) || !std::isfinite(powers[i]))
            throw std::invalid_argument("scenario.path_powers[" + std::to_string(i) + "]: negative or non-finite");
        total += powers[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("scenario.path_powers: must sum to 1 (got " + std::to_string(total) + ")");

    const auto check_radii = [&](const std::vector<double> &radii, const std::string &field) {
        if (radii.size() != num_paths + 1)
            throw std::invalid_argument("scenario." + field + ": expected " + std::to_string(num_paths + 1) +
                                        " entries in node order [TX, R_1, ..., RX], got " +
                                        std::to_string(radii.size()));
        for (std::size_t i = 0; i < radii.size(); ++i)
            if (!(radii[i] >= 0.0) || !std::isfinite(radii[i]))
                throw std::invalid_argument("scenario." + field + "[" + std::to_string(i) +
                                            "]: negative or non-finite radius");
        if (radii[0] != 0.0)
            throw std::invalid_argument("scenario." + field + "[0]: the TX position is known perfectly, radius "
                                                              "must be 0");
    };
    check_radii(radii_tx, "radii_tx");
    check_radii(radii_rx, "radii_rx");

    if (n_tx < 1 || n_rx < 1)
        throw std::invalid_argument("scenario.n_tx/n_rx: antenna counts must be >= 1");
    if (m_tx < 2 || m_rx < 2)
        throw std::invalid_argument("scenario.m_tx/m_rx: codebook sizes must be >= 2");
    if (d_tx < 1 || d_tx > m_tx)
        throw std::invalid_argument("scenario.d_tx: must be in [1, m_tx]");
    if (d_rx < 1 || d_rx > m_rx)
        throw std::invalid_argument("scenario.d_rx: must be in [1, m_rx]");
    if (mc_iterations < 1)
        throw std::invalid_argument("scenario.mc_iterations: must be >= 1");
    if (!std::isfinite(snr_db))
        throw std::invalid_argument("scenario.snr_db: non-finite");

    return Scenario{name,
                    PositionMatrix(tx, reflectors, rx),
                    PathProfile(powers),
                    ArrayConfig(n_tx, n_rx),
                    m_tx,
                    m_rx,
                    ErrorModel(radii_tx, radii_rx),
                    StrategyConfig{d_tx, d_rx, mc_iterations, seed},
                    snr_db,
                    SweepSpec::parse(sweep_str)};
}

inline nlohmann::json scenario_to_json(const Scenario &s)
{
    nlohmann::json j;
    if (!s.name.empty())
        j["name"] = s.name;
    j["tx"] = {s.positions.tx().x, s.positions.tx().y};
    nlohmann::json refl = nlohmann::json::array();
    for (const Point2 &r : s.positions.reflectors())
        refl.push_back({r.x, r.y});
    j["reflectors"] = refl;
    j["rx"] = {s.positions.rx().x, s.positions.rx().y};
    j["path_powers"] = s.profile.powers();
    j["n_tx"] = s.arrays.n_tx;
    j["n_rx"] = s.arrays.n_rx;
    j["m_tx"] = s.m_tx;
    j["m_rx"] = s.m_rx;
    j["radii_tx"] = s.errors.radii(Side::tx);
    j["radii_rx"] = s.errors.radii(Side::rx);
    j["d_tx"] = s.strategy.d_tx;
    j["d_rx"] = s.strategy.d_rx;
    j["mc_iterations"] = s.strategy.mc_iterations;
    j["seed"] = s.strategy.seed;
    j["snr_db"] = s.snr_db;
    j["sweep"] = s.sweep.str();
    return j;
}

inline Scenario load_scenario(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scenario file '" + path + "'");
    nlohmann::json j;
    try
    {
        in >> j;
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw std::runtime_error("scenario file '" + path + "': " + e.what());
    }
    return scenario_from_json(j);
}

inline void write_scenario(const Scenario &s, const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write scenario file '" + path + "'");
    out << scenario_to_json(s).dump(2) << '\n';
}

// FNV-1a over the canonical JSON dump; embedded in result files so a sweep can be
// traced back to the exact configuration that produced it.
inline std::uint64_t scenario_hash(const Scenario &s)
{
    const std::string dump = scenario_to_json(s).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace beamalign

#endif
