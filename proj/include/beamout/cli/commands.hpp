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

#ifndef BEAMOUT_CLI_COMMANDS_HPP
#define BEAMOUT_CLI_COMMANDS_HPP

#include "beamout/cli/config.hpp"
#include "beamout/error.hpp"
#include "beamout/channel.hpp"
#include "beamout/gauss2d.hpp"
#include "beamout/outage.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace beamout::cli
{

// A fully resolved physical configuration. theta_3db = optimal is replaced by the
// budget optimum and P_max by the budgeted boresight gain when p_t is given.
struct Scenario
{
    gauss2d::Covariance2x2 R;
    channel::AntennaConfig antenna;
    channel::LinkConfig link;
    std::optional<double> p_t_watts;
};

// Resolves cfg with the sweep axis (if any) set to axis_value.
Scenario resolve(const ScenarioConfig &cfg, std::optional<double> axis_value = std::nullopt);

struct SweepRow
{
    double axis_value = 0.0;
    outage::RegimeKind regime = outage::RegimeKind::AlwaysOutage;
    double k = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double quadrature = 0.0;
    double mc = 0.0;        // NaN when mc_samples = 0
    double mc_stderr = 0.0; // NaN when mc_samples = 0
    double tightness_ratio = 0.0;
};

// Evaluates one grid value of the sweep (or the point scenario when axis_value is empty).
SweepRow evaluate(const ScenarioConfig &cfg, std::optional<double> axis_value);

// All grid rows in axis order; points run concurrently on up to `threads` workers (0: hardware).
std::vector<SweepRow> run_sweep(const ScenarioConfig &cfg, unsigned threads = 0);

void write_csv(std::ostream &out, SweepAxis axis, std::span<const SweepRow> rows);

struct SweepTally
{
    std::size_t rows = 0;
    std::size_t outside_bounds = 0; // quadrature outside [lower - 1e-12, upper + 1e-12]
    std::size_t mc_checked = 0;
    std::size_t mc_outliers = 0; // |mc - quadrature| > 4 standard errors at p = quadrature
};

SweepTally tally(std::span<const SweepRow> rows, std::uint64_t mc_samples);

// Subcommands. They return the process exit code and report errors on err.
int cmd_point(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_sweep(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_optimize(const ScenarioConfig &cfg, bool verify, std::ostream &out, std::ostream &err);

// 2 for configuration and input validation errors, 3 for numerical failures.
int exit_code(const Error &e) noexcept;

} // namespace beamout::cli

#endif
