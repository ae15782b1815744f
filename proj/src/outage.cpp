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

#include "beamout/outage.hpp"

#include "beamout/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace beamout::outage
{

namespace
{
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Squared critical angle (theta_3db^2 / 1.2) lg(boresight power / gamma_th).
double critical_angle_sq(const channel::AntennaConfig &ant, const channel::LinkConfig &link)
{
    const double margin = ant.p_max() * channel::friis_gain(link) / link.gamma_th();
    return ant.theta_3db() * ant.theta_3db() / channel::kPatternExponent * std::log10(margin);
}

double log_sum_exp(double a, double b)
{
    const double hi = std::max(a, b);
    if (hi == -std::numeric_limits<double>::infinity())
        return hi;
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

void validate(double k, double d)
{
    if (!(std::isfinite(k) && k > 0.0))
        throw Error(Errc::invalid_argument, "outage bounds: k must be finite and > 0");
    if (!(std::isfinite(d) && d > 0.0))
        throw Error(Errc::invalid_argument, "outage bounds: d must be finite and > 0");
}
} // namespace

const char *to_string(RegimeKind kind) noexcept
{
    switch (kind)
    {
    case RegimeKind::AlwaysCovered: return "AlwaysCovered";
    case RegimeKind::AlwaysOutage: return "AlwaysOutage";
    case RegimeKind::Probabilistic: return "Probabilistic";
    case RegimeKind::WideBeam: return "WideBeam";
    }
    return "unknown";
}

OutageRegime classify(const channel::AntennaConfig &ant, const channel::LinkConfig &link) noexcept
{
    const double boresight = ant.p_max() * channel::friis_gain(link);
    if (boresight <= link.gamma_th())
        return {RegimeKind::AlwaysOutage, kNaN, kNaN, kNaN};
    if (boresight * ant.a_m() >= link.gamma_th())
        return {RegimeKind::AlwaysCovered, kNaN, kNaN, kNaN};

    const double angle = std::sqrt(critical_angle_sq(ant, link));
    if (angle < 0.5 * std::numbers::pi)
        return {RegimeKind::Probabilistic, std::tan(angle), angle, kNaN};
    if (angle < std::numbers::pi)
        return {RegimeKind::WideBeam, std::tan(angle), angle, std::tan(std::numbers::pi - angle)};
    return {RegimeKind::AlwaysCovered, kNaN, angle, kNaN};
}

double k_factor(const channel::AntennaConfig &ant, const channel::LinkConfig &link)
{
    const double margin = ant.p_max() * channel::friis_gain(link) / link.gamma_th();
    if (!(margin > 1.0))
        throw Error(Errc::wrong_regime, "k-factor: boresight power does not exceed gamma_th");
    const double angle = std::sqrt(critical_angle_sq(ant, link));
    if (angle >= 0.5 * std::numbers::pi)
        throw Error(Errc::beam_wraparound, "k-factor: critical angle reaches pi/2, tan is singular");
    return std::tan(angle);
}

OutageEstimate outage_bounds(double k, double d, const gauss2d::Covariance2x2 &R)
{
    validate(k, d);
    const gauss2d::Point2 truth{0.0, d};

    OutageEstimate e;
    e.regime = {RegimeKind::Probabilistic, k, std::atan(k), kNaN};
    e.i_r = gauss2d::halfplane_prob({1.0, -k, 0.0}, truth, R);
    e.i_l = gauss2d::halfplane_prob({-1.0, -k, 0.0}, truth, R);
    e.i_b = gauss2d::halfplane_prob({0.0, -1.0, 0.0}, truth, R);

    const double sum = e.i_r + e.i_l;
    e.upper = std::min(1.0, sum);
    e.lower = std::clamp(sum - e.i_b, 0.0, e.upper);

    const TightnessRatio t = tightness_ratio(k, d, R);
    e.tightness_ratio = t.ratio;
    e.degenerate = t.degenerate;
    return e;
}

TightnessRatio tightness_ratio(double k, double d, const gauss2d::Covariance2x2 &R)
{
    validate(k, d);
    const ReformedDenominators den = reformed_denominators(k, R);
    const double z_r = d / den.right;
    const double z_l = d / den.left;
    const double z_b = d / den.bottom;

    // log domain keeps the ratio meaningful after I_B, or all three terms, underflow
    const double log_ratio = gauss2d::log_q_function(z_b) -
                             log_sum_exp(gauss2d::log_q_function(z_r), gauss2d::log_q_function(z_l));
    const bool degenerate = gauss2d::q_function(z_r) + gauss2d::q_function(z_l) == 0.0;
    return {std::exp(log_ratio), log_ratio, degenerate};
}

ReformedDenominators reformed_denominators(double k, const gauss2d::Covariance2x2 &R)
{
    const double inv_k = 1.0 / k;
    return {std::sqrt(R.quadratic_form(-inv_k, 1.0)), std::sqrt(R.quadratic_form(inv_k, 1.0)),
            std::sqrt(R.r22())};
}

OutageEstimate estimate(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                        const gauss2d::Covariance2x2 &R)
{
    const OutageRegime regime = classify(ant, link);
    OutageEstimate e;
    e.regime = regime;
    switch (regime.kind)
    {
    case RegimeKind::AlwaysCovered:
    case RegimeKind::AlwaysOutage: {
        const double p = regime.kind == RegimeKind::AlwaysOutage ? 1.0 : 0.0;
        e.lower = e.upper = p;
        e.i_r = e.i_l = e.i_b = e.tightness_ratio = kNaN;
        return e;
    }
    case RegimeKind::Probabilistic: {
        e = outage_bounds(regime.k, link.d(), R);
        e.regime = regime;
        return e;
    }
    case RegimeKind::WideBeam: {
        // outage region is Phi_R n Phi_L with slope rear_slope
        const double c = regime.rear_slope;
        const gauss2d::Point2 truth{0.0, link.d()};
        e.i_r = gauss2d::halfplane_prob({1.0, -c, 0.0}, truth, R);
        e.i_l = gauss2d::halfplane_prob({-1.0, -c, 0.0}, truth, R);
        e.i_b = gauss2d::halfplane_prob({0.0, -1.0, 0.0}, truth, R);
        e.upper = std::min({e.i_r, e.i_l, e.i_b});
        e.lower = std::clamp(e.i_r + e.i_l - 1.0, 0.0, e.upper);
        e.tightness_ratio = kNaN;
        return e;
    }
    }
    return e;
}

} // namespace beamout::outage
