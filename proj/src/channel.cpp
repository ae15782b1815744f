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

#include "beamout/channel.hpp"

#include "beamout/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace beamout::channel
{

namespace
{
bool positive(double v) { return std::isfinite(v) && v > 0.0; }

// 1.2 ln(10) / theta_3db^2: the Gaussian rate of the main lobe in natural-log units
double lobe_rate(double theta_3db) { return kPatternExponent * std::numbers::ln10 / (theta_3db * theta_3db); }
} // namespace

AntennaConfig::AntennaConfig(double theta_3db, double a_m, double p_max)
    : theta_3db_(theta_3db), a_m_(a_m), p_max_(p_max)
{
    if (!positive(theta_3db))
        throw Error(Errc::invalid_argument, "antenna: theta_3db must be > 0");
    if (!(a_m > 0.0 && a_m < 1.0))
        throw Error(Errc::invalid_argument, "antenna: a_m must lie in (0, 1)");
    if (!positive(p_max))
        throw Error(Errc::invalid_argument, "antenna: p_max must be > 0");
}

LinkConfig::LinkConfig(double d, double lambda, double gamma_th)
    : d_(d), lambda_(lambda), gamma_th_(gamma_th)
{
    if (!positive(d) || !positive(lambda) || !positive(gamma_th))
        throw Error(Errc::invalid_argument, "link: d, lambda and gamma_th must be > 0");
}

double pattern_gain(double theta, const AntennaConfig &ant) noexcept
{
    const double ratio = theta / ant.theta_3db();
    return std::max(std::pow(10.0, -kPatternExponent * ratio * ratio), ant.a_m());
}

double friis_gain(const LinkConfig &link) noexcept
{
    const double spread = 4.0 * std::numbers::pi * link.d();
    return link.lambda() * link.lambda() / (spread * spread);
}

double received_power(double theta, const AntennaConfig &ant, const LinkConfig &link) noexcept
{
    return ant.p_max() * pattern_gain(theta, ant) * friis_gain(link);
}

double pointing_angle(gauss2d::Point2 p_hat, [[maybe_unused]] const LinkConfig &link)
{
    if (p_hat.x == 0.0 && p_hat.y == 0.0)
        throw Error(Errc::undefined_direction, "pointing angle undefined at the transmitter position");
    return std::atan2(p_hat.x, p_hat.y);
}

double transmit_power_exact(const AntennaConfig &ant) noexcept
{
    const double root = std::sqrt(lobe_rate(ant.theta_3db()));
    return ant.p_max() * std::sqrt(std::numbers::pi) * gauss2d::erf_function(std::numbers::pi * root) / root;
}

double pmax_from_budget(double p_t, double theta_3db)
{
    if (!positive(p_t) || !positive(theta_3db))
        throw Error(Errc::invalid_argument, "budget: p_t and theta_3db must be > 0");
    return p_t * std::sqrt(kPatternExponent * std::numbers::ln10) / (theta_3db * std::sqrt(std::numbers::pi));
}

double budget_approximation_error(double theta_3db) noexcept
{
    // 1 - erf(x) = 2 Q(x sqrt 2)
    return 2.0 * gauss2d::q_function(std::numbers::pi * std::sqrt(lobe_rate(theta_3db)) * std::numbers::sqrt2);
}

} // namespace beamout::channel
