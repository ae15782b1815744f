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

#ifndef BEAMOUT_CLI_CONFIG_HPP
#define BEAMOUT_CLI_CONFIG_HPP

// Scenario configuration: flat "key = value" text, one key per line, '#' starts a comment.
//
//   sigma1, sigma2   principal error std-devs [m]            default 1.0, 0.5
//   phi              major-axis orientation [rad]            default 0
//   theta_3db        half-power half-beamwidth [rad], or "optimal" (requires p_t)
//   a_m              side-lobe floor in (0, 1)
//   d, lambda        link distance, wavelength [m]
//   gamma_th         outage threshold [W]
//   p_max | p_t      boresight gain-power product [W] or transmit power (exactly one)
//   p_t_unit         W (default), dBm, dBW; bare "dB" is read as dBm with a warning.
//                    p_t may also carry the unit inline: "p_t = 24 dBm".
//   sweep_axis       d | p_t | theta_3db (sweep only); p_t sweep values use p_t_unit
//   sweep_min, sweep_max, sweep_points
//   mc_samples       Monte Carlo draws per point, 0 disables   default 1000000
//   mc_seed          default 1
//   quad_tol         absolute quadrature tolerance             default 1e-12
//
// Real values accept "pi" expressions such as "pi/4", "3*pi/4" or "0.5*pi".

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace beamout::cli
{

enum class SweepAxis
{
    None,
    D,
    Pt,
    Theta3db
};

enum class PowerUnit
{
    W,
    dBm,
    dBW
};

const char *to_string(SweepAxis axis) noexcept;

double to_watts(double value, PowerUnit unit) noexcept;

struct ScenarioConfig
{
    double sigma1 = 1.0;
    double sigma2 = 0.5;
    double phi = 0.0;
    std::optional<double> theta_3db;
    bool theta_optimal = false;
    std::optional<double> a_m;
    std::optional<double> d;
    std::optional<double> lambda;
    std::optional<double> gamma_th;
    std::optional<double> p_max;
    std::optional<double> p_t; // in p_t_unit
    PowerUnit p_t_unit = PowerUnit::W;

    SweepAxis sweep_axis = SweepAxis::None;
    std::optional<double> sweep_min;
    std::optional<double> sweep_max;
    std::optional<std::size_t> sweep_points;

    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t mc_seed = 1;
    double quad_tol = 1e-12;

    std::vector<std::string> warnings;

    std::string source = "config";
    std::map<std::string, int> key_lines; // line of each key seen
};

// Throws Error(Errc::config) with "<source>:<line>: message" on malformed input.
ScenarioConfig parse_config(std::istream &in, const std::string &source = "config");

ScenarioConfig load_config(const std::filesystem::path &path);

// Grid values of the sweep axis, evenly spaced from sweep_min to sweep_max inclusive.
std::vector<double> sweep_grid(const ScenarioConfig &cfg);

// Checks that the keys a command needs are present and consistent. Throws Error(Errc::config).
void require_point(const ScenarioConfig &cfg);
void require_sweep(const ScenarioConfig &cfg);
void require_optimize(const ScenarioConfig &cfg);

} // namespace beamout::cli

#endif
