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

#include "beamout/optimizer.hpp"

#include "beamout/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace beamout::optimizer
{

BudgetedLink::BudgetedLink(double p_t, channel::LinkConfig link, double a_m)
    : p_t_(p_t), link_(link), a_m_(a_m)
{
    if (!(std::isfinite(p_t) && p_t > 0.0))
        throw Error(Errc::invalid_argument, "budgeted link: p_t must be > 0");
    if (!(a_m > 0.0 && a_m < 1.0))
        throw Error(Errc::invalid_argument, "budgeted link: a_m must lie in (0, 1)");
}

double beamwidth_limit(const BudgetedLink &b) noexcept
{
    const channel::LinkConfig &l = b.link();
    const double spread = 4.0 * std::numbers::pi * l.d();
    return l.lambda() * l.lambda() * b.p_t() * std::sqrt(channel::kPatternExponent * std::numbers::ln10) /
           (std::sqrt(std::numbers::pi) * spread * spread * l.gamma_th());
}

Optimum optimal_beamwidth(const BudgetedLink &b)
{
    const channel::LinkConfig &l = b.link();
    const double spread = 4.0 * std::numbers::pi * l.d();
    const double shrink = std::pow(10.0, -1.0 / (2.0 * std::numbers::ln10));

    Optimum opt;
    opt.beam_limit = beamwidth_limit(b);
    opt.theta_star = opt.beam_limit * shrink;
    const double angle = l.lambda() * l.lambda() * b.p_t() /
                         (std::sqrt(2.0 * std::numbers::pi) * spread * spread * l.gamma_th()) * shrink;
    opt.k_star = std::tan(angle);
    opt.feasible = true;

    if (angle >= 0.5 * std::numbers::pi)
    {
        opt.feasible = false;
        opt.k_star = std::numeric_limits<double>::quiet_NaN();
        opt.diagnostic = "k* tan argument " + std::to_string(angle) + " reaches pi/2";
    }
    else if (opt.theta_star > channel::kSmallBeamLimit)
    {
        opt.feasible = false;
        opt.diagnostic = "theta* = " + std::to_string(opt.theta_star) +
                         " rad exceeds the small-beamwidth budget approximation limit " +
                         std::to_string(channel::kSmallBeamLimit) + " rad";
    }
    return opt;
}

double budget_pmax(double p_t, double theta_3db)
{
    if (theta_3db <= channel::kSmallBeamLimit)
        return channel::pmax_from_budget(p_t, theta_3db);
    // P_t is linear in P_max, so the exact budget inverts by a single division
    return p_t / channel::transmit_power_exact(channel::AntennaConfig(theta_3db, 0.5, 1.0));
}

channel::AntennaConfig budgeted_antenna(const BudgetedLink &b, double theta_3db)
{
    return {theta_3db, b.a_m(), budget_pmax(b.p_t(), theta_3db)};
}

std::vector<double> default_grid(const BudgetedLink &b, std::size_t n)
{
    const double limit = beamwidth_limit(b);
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = limit * static_cast<double>(i + 1) / static_cast<double>(n + 1);
    return grid;
}

VerifyReport verify_optimum(const BudgetedLink &b, const gauss2d::Covariance2x2 &R, std::span<const double> grid,
                            double tol)
{
    if (grid.size() < 2)
        throw Error(Errc::invalid_argument, "verify_optimum: grid needs at least two points");
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
            throw Error(Errc::invalid_argument, "verify_optimum: grid must be positive and increasing");

    VerifyReport report;
    report.theta_star = optimal_beamwidth(b).theta_star;
    report.points.reserve(grid.size());

    const double friis = channel::friis_gain(b.link());
    bool have_argmin = false;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const channel::AntennaConfig ant = budgeted_antenna(b, grid[i]);
        const outage::OutageRegime regime = outage::classify(ant, b.link());

        GridPoint pt;
        pt.theta_3db = grid[i];
        pt.p_max = ant.p_max();
        pt.regime = regime.kind;
        pt.k = regime.k;
        pt.p_out = oracle::outage_probability(ant, b.link(), R, tol).p_out;
        pt.sidelobe_covered = ant.p_max() * ant.a_m() * friis >= b.link().gamma_th();
        report.points.push_back(pt);

        if (pt.sidelobe_covered)
        {
            ++report.excluded;
            continue;
        }
        if (!have_argmin || pt.p_out < report.points[report.argmin].p_out)
        {
            report.argmin = i;
            have_argmin = true;
        }
    }
    if (!have_argmin)
        throw Error(Errc::invalid_argument, "verify_optimum: every grid point is side-lobe covered");

    const std::size_t i = report.argmin;
    report.argmin_theta = grid[i];
    report.argmin_p_out = report.points[i].p_out;
    report.gap = report.argmin_theta - report.theta_star;
    double step = 0.0;
    if (i > 0)
        step = std::max(step, grid[i] - grid[i - 1]);
    if (i + 1 < grid.size())
        step = std::max(step, grid[i + 1] - grid[i]);
    report.grid_step = step;
    report.within_one_step = std::fabs(report.gap) <= step * (1.0 + 1e-12);
    return report;
}

} // namespace beamout::optimizer
