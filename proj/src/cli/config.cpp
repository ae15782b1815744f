// SPDX-License-Identifier: Apache-2.0
//
// beamout: outage analysis and beamwidth optimization for positioning-assisted beamforming
// Copyright (C) 2026 The beamout authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "beamout/cli/config.hpp"

#include "beamout/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <string_view>

namespace beamout::cli
{

namespace
{

constexpr std::array<std::string_view, 18> kKeys = {
    "sigma1", "sigma2", "phi", "theta_3db", "a_m", "d", "lambda", "gamma_th", "p_max",
    "p_t", "p_t_unit", "sweep_axis", "sweep_min", "sweep_max", "sweep_points", "mc_samples", "mc_seed", "quad_tol"};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string &source, int line, const std::string &msg)
{
    throw Error(Errc::config, source + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail_key(const ScenarioConfig &cfg, const std::string &key, const std::string &msg)
{
    const auto it = cfg.key_lines.find(key);
    if (it == cfg.key_lines.end())
        throw Error(Errc::config, cfg.source + ": " + msg);
    fail(cfg.source, it->second, msg);
}

std::optional<double> parse_factor(std::string_view s)
{
    s = trim(s);
    if (s == "pi")
        return std::numbers::pi;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

// number | pi | a*b*... | (...)/c
std::optional<double> parse_real(std::string_view s)
{
    const auto slash = s.find('/');
    std::string_view numerator = s.substr(0, slash);
    double value = 1.0;
    bool any = false;
    while (true)
    {
        const auto star = numerator.find('*');
        const auto factor = parse_factor(numerator.substr(0, star));
        if (!factor)
            return std::nullopt;
        value *= *factor;
        any = true;
        if (star == std::string_view::npos)
            break;
        numerator.remove_prefix(star + 1);
    }
    if (!any)
        return std::nullopt;
    if (slash != std::string_view::npos)
    {
        const auto divisor = parse_factor(s.substr(slash + 1));
        if (!divisor || *divisor == 0.0)
            return std::nullopt;
        value /= *divisor;
    }
    if (!std::isfinite(value))
        return std::nullopt;
    return value;
}

std::optional<std::uint64_t> parse_count(std::string_view s)
{
    s = trim(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

std::optional<PowerUnit> parse_unit(std::string_view s, bool &bare_db)
{
    bare_db = false;
    if (s == "W")
        return PowerUnit::W;
    if (s == "dBm")
        return PowerUnit::dBm;
    if (s == "dBW")
        return PowerUnit::dBW;
    if (s == "dB")
    {
        bare_db = true;
        return PowerUnit::dBm;
    }
    return std::nullopt;
}

} // namespace

const char *to_string(SweepAxis axis) noexcept
{
    switch (axis)
    {
    case SweepAxis::None: return "none";
    case SweepAxis::D: return "d";
    case SweepAxis::Pt: return "p_t";
    case SweepAxis::Theta3db: return "theta_3db";
    }
    return "unknown";
}

double to_watts(double value, PowerUnit unit) noexcept
{
    switch (unit)
    {
    case PowerUnit::W: return value;
    case PowerUnit::dBm: return std::pow(10.0, value / 10.0) * 1e-3;
    case PowerUnit::dBW: return std::pow(10.0, value / 10.0);
    }
    return value;
}

ScenarioConfig parse_config(std::istream &in, const std::string &source)
{
    ScenarioConfig cfg;
    cfg.source = source;
    std::optional<PowerUnit> inline_unit;
    int inline_unit_line = 0;
    std::optional<double> raw_p_t;

    std::string text;
    int line = 0;
    while (std::getline(in, text))
    {
        ++line;
        std::string_view view(text);
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;

        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            fail(source, line, "expected 'key = value'");
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            fail(source, line, "unknown key '" + key + "'");
        if (cfg.key_lines.contains(key))
            fail(source, line, "duplicate key '" + key + "'");
        if (value.empty())
            fail(source, line, "missing value for '" + key + "'");
        cfg.key_lines[key] = line;

        auto real = [&](bool must_be_positive) {
            const auto v = parse_real(value);
            if (!v)
                fail(source, line, "'" + key + "' expects a real number, got '" + std::string(value) + "'");
            if (must_be_positive && !(*v > 0.0))
                fail(source, line, "'" + key + "' must be > 0");
            return *v;
        };
        auto count = [&] {
            const auto v = parse_count(value);
            if (!v)
                fail(source, line, "'" + key + "' expects a non-negative integer, got '" + std::string(value) + "'");
            return *v;
        };

        if (key == "sigma1")
            cfg.sigma1 = real(true);
        else if (key == "sigma2")
            cfg.sigma2 = real(true);
        else if (key == "phi")
            cfg.phi = real(false);
        else if (key == "theta_3db")
        {
            if (value == "optimal")
                cfg.theta_optimal = true;
            else
                cfg.theta_3db = real(true);
        }
        else if (key == "a_m")
        {
            const double v = real(true);
            if (!(v < 1.0))
                fail(source, line, "'a_m' must lie in (0, 1)");
            cfg.a_m = v;
        }
        else if (key == "d")
            cfg.d = real(true);
        else if (key == "lambda")
            cfg.lambda = real(true);
        else if (key == "gamma_th")
            cfg.gamma_th = real(true);
        else if (key == "p_max")
            cfg.p_max = real(true);
        else if (key == "p_t")
        {
            // optional inline unit: "24 dBm"
            const auto space = value.find_first_of(" \t");
            std::string_view number = value;
            if (space != std::string_view::npos)
            {
                const std::string_view unit_text = trim(value.substr(space));
                bool bare = false;
                inline_unit = parse_unit(unit_text, bare);
                if (!inline_unit)
                    fail(source, line, "unknown power unit '" + std::string(unit_text) + "' (use W, dBm or dBW)");
                if (bare)
                    cfg.warnings.push_back(source + ":" + std::to_string(line) +
                                           ": bare 'dB' power unit read as dBm; write dBm or dBW explicitly");
                inline_unit_line = line;
                number = value.substr(0, space);
            }
            const auto v = parse_real(number);
            if (!v)
                fail(source, line, "'p_t' expects a real number, got '" + std::string(number) + "'");
            raw_p_t = *v;
        }
        else if (key == "p_t_unit")
        {
            bool bare = false;
            const auto unit = parse_unit(value, bare);
            if (!unit)
                fail(source, line, "unknown power unit '" + std::string(value) + "' (use W, dBm or dBW)");
            if (bare)
                cfg.warnings.push_back(source + ":" + std::to_string(line) +
                                       ": bare 'dB' power unit read as dBm; write dBm or dBW explicitly");
            cfg.p_t_unit = *unit;
        }
        else if (key == "sweep_axis")
        {
            if (value == "d")
                cfg.sweep_axis = SweepAxis::D;
            else if (value == "p_t")
                cfg.sweep_axis = SweepAxis::Pt;
            else if (value == "theta_3db")
                cfg.sweep_axis = SweepAxis::Theta3db;
            else
                fail(source, line, "sweep_axis must be one of d, p_t, theta_3db");
        }
        else if (key == "sweep_min")
            cfg.sweep_min = real(false);
        else if (key == "sweep_max")
            cfg.sweep_max = real(false);
        else if (key == "sweep_points")
        {
            const auto n = count();
            if (n < 2)
                fail(source, line, "'sweep_points' must be >= 2");
            cfg.sweep_points = static_cast<std::size_t>(n);
        }
        else if (key == "mc_samples")
            cfg.mc_samples = count();
        else if (key == "mc_seed")
            cfg.mc_seed = count();
        else if (key == "quad_tol")
        {
            const double v = real(true);
            if (!(v >= 1e-14 && v <= 1e-4))
                fail(source, line, "'quad_tol' must lie in [1e-14, 1e-4]");
            cfg.quad_tol = v;
        }
    }

    if (inline_unit)
    {
        if (cfg.key_lines.contains("p_t_unit") && *inline_unit != cfg.p_t_unit)
            fail(source, inline_unit_line, "inline p_t unit conflicts with p_t_unit");
        cfg.p_t_unit = *inline_unit;
    }
    if (raw_p_t)
    {
        if (cfg.p_t_unit == PowerUnit::W && !(*raw_p_t > 0.0))
            fail(source, cfg.key_lines["p_t"], "'p_t' must be > 0 W");
        cfg.p_t = raw_p_t;
    }
    if (cfg.sigma1 < cfg.sigma2)
        fail_key(cfg, cfg.key_lines.contains("sigma2") ? "sigma2" : "sigma1", "sigma1 must be >= sigma2");
    if (cfg.p_max && cfg.p_t)
        fail_key(cfg, "p_t", "give exactly one of p_max and p_t");
    if (cfg.theta_optimal && !cfg.p_t && cfg.sweep_axis != SweepAxis::Pt)
        fail_key(cfg, "theta_3db", "theta_3db = optimal requires p_t");
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::config, path.string() + ": cannot open config file");
    return parse_config(in, path.string());
}

std::vector<double> sweep_grid(const ScenarioConfig &cfg)
{
    const double lo = cfg.sweep_min.value();
    const double hi = cfg.sweep_max.value();
    const std::size_t n = cfg.sweep_points.value();
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return grid;
}

namespace
{

void require_key(const ScenarioConfig &cfg, bool present, const std::string &key)
{
    if (!present)
        throw Error(Errc::config, cfg.source + ": missing required key '" + key + "'");
}

void require_common(const ScenarioConfig &cfg, SweepAxis axis)
{
    require_key(cfg, cfg.lambda.has_value(), "lambda");
    require_key(cfg, cfg.gamma_th.has_value(), "gamma_th");
    require_key(cfg, cfg.a_m.has_value(), "a_m");
    if (axis != SweepAxis::D)
        require_key(cfg, cfg.d.has_value(), "d");
    if (axis != SweepAxis::Theta3db)
        require_key(cfg, cfg.theta_3db.has_value() || cfg.theta_optimal, "theta_3db");
    if (axis != SweepAxis::Pt)
        require_key(cfg, cfg.p_max.has_value() || cfg.p_t.has_value(), "p_max' or 'p_t");
}

} // namespace

void require_point(const ScenarioConfig &cfg)
{
    if (cfg.sweep_axis != SweepAxis::None)
        fail_key(cfg, "sweep_axis", "point evaluates a single scenario; remove sweep_axis or use the sweep command");
    require_common(cfg, SweepAxis::None);
}

void require_sweep(const ScenarioConfig &cfg)
{
    require_key(cfg, cfg.sweep_axis != SweepAxis::None, "sweep_axis");
    require_key(cfg, cfg.sweep_min.has_value(), "sweep_min");
    require_key(cfg, cfg.sweep_max.has_value(), "sweep_max");
    require_key(cfg, cfg.sweep_points.has_value(), "sweep_points");
    require_common(cfg, cfg.sweep_axis);

    const bool power_axis = cfg.sweep_axis == SweepAxis::Pt;
    if (!(power_axis && cfg.p_t_unit != PowerUnit::W) && !(*cfg.sweep_min > 0.0))
        fail_key(cfg, "sweep_min", "sweep range must be positive");
    if (!(*cfg.sweep_max > *cfg.sweep_min))
        fail_key(cfg, "sweep_max", "sweep range must be increasing (sweep_max > sweep_min)");
    if (power_axis && cfg.p_max)
        fail_key(cfg, "p_max", "sweep_axis = p_t cannot be combined with p_max");
    if (cfg.sweep_axis == SweepAxis::Theta3db && cfg.theta_optimal)
        fail_key(cfg, "theta_3db", "sweep_axis = theta_3db cannot be combined with theta_3db = optimal");
}

void require_optimize(const ScenarioConfig &cfg)
{
    require_key(cfg, cfg.p_t.has_value(), "p_t");
    require_key(cfg, cfg.lambda.has_value(), "lambda");
    require_key(cfg, cfg.gamma_th.has_value(), "gamma_th");
    require_key(cfg, cfg.a_m.has_value(), "a_m");
    require_key(cfg, cfg.d.has_value(), "d");
}

} // namespace beamout::cli
