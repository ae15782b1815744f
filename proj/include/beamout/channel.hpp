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

#ifndef BEAMOUT_CHANNEL_HPP
#define BEAMOUT_CHANNEL_HPP

// Deterministic link model: main-lobe pattern with a constant side-lobe floor,
// free-space pathloss, and the transmit-power budget that ties P_t to P_max.
// Powers are in watts, lengths in meters, angles in radians.

#include "beamout/gauss2d.hpp"

namespace beamout::channel
{

// Exponent constant of the main-lobe pattern 10^(-1.2 theta^2 / theta_3db^2).
inline constexpr double kPatternExponent = 1.2;

// Beamwidth up to which the erf term of the exact budget is 1 to machine precision.
inline constexpr double kSmallBeamLimit = 0.3;

class AntennaConfig
{
public:
    // theta_3db is the half-power half-beamwidth; p_max the boresight gain-power product.
    AntennaConfig(double theta_3db, double a_m, double p_max);

    double theta_3db() const noexcept { return theta_3db_; }
    double a_m() const noexcept { return a_m_; }
    double p_max() const noexcept { return p_max_; }

    AntennaConfig with_p_max(double p_max) const { return {theta_3db_, a_m_, p_max}; }
    AntennaConfig with_theta_3db(double theta_3db) const { return {theta_3db, a_m_, p_max_}; }

private:
    double theta_3db_;
    double a_m_;
    double p_max_;
};

// The true receiver sits at (0, d); the transmitter at the origin.
class LinkConfig
{
public:
    LinkConfig(double d, double lambda, double gamma_th);

    double d() const noexcept { return d_; }
    double lambda() const noexcept { return lambda_; }
    double gamma_th() const noexcept { return gamma_th_; }

    LinkConfig with_d(double d) const { return {d, lambda_, gamma_th_}; }

private:
    double d_;
    double lambda_;
    double gamma_th_;
};

double pattern_gain(double theta, const AntennaConfig &ant) noexcept;

double friis_gain(const LinkConfig &link) noexcept;

double received_power(double theta, const AntennaConfig &ant, const LinkConfig &link) noexcept;

// Signed deviation in (-pi, pi] of the direction to p_hat from the true receiver
// direction (+y), i.e. atan2(x_hat, y_hat).
double pointing_angle(gauss2d::Point2 p_hat, const LinkConfig &link);

// P_t = int_{-pi}^{pi} P_max 10^(-1.2 theta^2/theta_3db^2) d theta (side lobes neglected).
double transmit_power_exact(const AntennaConfig &ant) noexcept;

// Small-beamwidth inversion P_max ~= P_t sqrt(1.2 ln 10) / (theta_3db sqrt(pi)).
double pmax_from_budget(double p_t, double theta_3db);

// Relative error of the small-beamwidth budget approximation at theta_3db: 1 - erf(pi sqrt(1.2 ln10) / theta_3db).
double budget_approximation_error(double theta_3db) noexcept;

} // namespace beamout::channel

#endif
