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

#ifndef BEAMOUT_OPTIMIZER_HPP
#define BEAMOUT_OPTIMIZER_HPP

// Beamwidth optimization under a fixed transmit-power budget.
//
// With P_max = P_t sqrt(1.2 ln10) / (theta_3db sqrt(pi)), maximizing k (and hence
// minimizing the outage region) is maximizing theta^2 lg(C / theta) on (0, C), with
//   C = lambda^2 P_t sqrt(1.2 ln10) / (sqrt(pi) (4 pi d)^2 gamma_th).
// The maximizer is theta* = C 10^(-1/(2 ln10)) = C e^(-1/2).

#include "beamout/channel.hpp"
#include "beamout/gauss2d.hpp"
#include "beamout/oracle.hpp"
#include "beamout/outage.hpp"

#include <span>
#include <string>
#include <vector>

namespace beamout::optimizer
{

class BudgetedLink
{
public:
    BudgetedLink(double p_t, channel::LinkConfig link, double a_m);

    double p_t() const noexcept { return p_t_; }
    const channel::LinkConfig &link() const noexcept { return link_; }
    double a_m() const noexcept { return a_m_; }

private:
    double p_t_;
    channel::LinkConfig link_;
    double a_m_;
};

struct Optimum
{
    double theta_star = 0.0;
    double k_star = 0.0;
    bool feasible = false;
    double beam_limit = 0.0; // C: k > 0 requires theta_3db < C
    std::string diagnostic;  // reason when infeasible
};

// C, the beamwidth at which the budgeted boresight power equals gamma_th.
double beamwidth_limit(const BudgetedLink &b) noexcept;

Optimum optimal_beamwidth(const BudgetedLink &b);

// Boresight gain for a beamwidth under the budget: the small-beam inversion up to
// channel::kSmallBeamLimit, the exact budget integral inverted beyond it.
double budget_pmax(double p_t, double theta_3db);

channel::AntennaConfig budgeted_antenna(const BudgetedLink &b, double theta_3db);

struct GridPoint
{
    double theta_3db = 0.0;
    double p_max = 0.0;
    outage::RegimeKind regime = outage::RegimeKind::AlwaysOutage;
    double k = 0.0;
    double p_out = 0.0;
    bool sidelobe_covered = false; // excluded from the argmin, see verify_optimum
};

struct VerifyReport
{
    std::vector<GridPoint> points;
    std::size_t argmin = 0;
    double argmin_theta = 0.0;
    double argmin_p_out = 0.0;
    double theta_star = 0.0;
    double gap = 0.0;       // argmin_theta - theta_star
    double grid_step = 0.0; // widest spacing adjacent to the argmin
    bool within_one_step = false;
    std::size_t excluded = 0;
};

// 0 < C i / (n + 1) < C for i = 1..n
std::vector<double> default_grid(const BudgetedLink &b, std::size_t n);

// Sweeps theta_3db over the grid, evaluating the exact outage probability by quadrature,
// and locates the grid argmin. Points whose budgeted P_max lets the side-lobe floor alone
// clear gamma_th (theta_3db <= a_m C under the small-beam inversion) are reported but not
// eligible as the argmin: there the side-lobe-free budget grants an unbounded P_max.
VerifyReport verify_optimum(const BudgetedLink &b, const gauss2d::Covariance2x2 &R, std::span<const double> grid,
                            double tol = oracle::kDefaultQuadTol);

} // namespace beamout::optimizer

#endif
