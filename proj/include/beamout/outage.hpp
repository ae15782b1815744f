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

#ifndef BEAMOUT_OUTAGE_HPP
#define BEAMOUT_OUTAGE_HPP

// Outage regimes and closed-form outage bounds.
//
// In the probabilistic regime the receiver is in outage iff the estimate falls
// in {|x_hat| >= k y_hat}, the union of the half-planes
//   Phi_R = {x_hat >= k y_hat}  and  Phi_L = {x_hat <= -k y_hat}.
// Their Gaussian measures I_R, I_L give the upper bound I_R + I_L; the overlap
// Phi_R n Phi_L lies in Phi_B = {y_hat <= 0}, so I_R + I_L - I_B is a lower bound.

#include "beamout/channel.hpp"
#include "beamout/gauss2d.hpp"

namespace beamout::outage
{

enum class RegimeKind
{
    AlwaysCovered, // side-lobe floor (or a main lobe wider than the half-turn) clears the threshold
    AlwaysOutage,  // boresight power does not clear the threshold
    Probabilistic, // outage iff |x_hat| >= k y_hat, k > 0
    WideBeam       // main-lobe edge beyond 90 degrees: outage iff y_hat <= 0 and |x_hat| <= rear_slope |y_hat|
};

const char *to_string(RegimeKind kind) noexcept;

struct OutageRegime
{
    RegimeKind kind = RegimeKind::AlwaysOutage;
    double k = 0.0;              // tan(critical_angle); > 0 in Probabilistic, < 0 in WideBeam, NaN otherwise
    double critical_angle = 0.0; // |theta| where the main-lobe power meets the threshold; NaN if not applicable
    double rear_slope = 0.0;     // WideBeam only: tan(pi - critical_angle); NaN otherwise
};

struct OutageEstimate
{
    OutageRegime regime;
    double lower = 0.0;
    double upper = 0.0;
    double i_r = 0.0;
    double i_l = 0.0;
    double i_b = 0.0;
    double tightness_ratio = 0.0; // i_b / (i_r + i_l); NaN when the regime has no bound pair
    bool degenerate = false;      // i_r + i_l underflowed: bounds coincide at machine precision
};

struct TightnessRatio
{
    double ratio = 0.0;
    double log_ratio = 0.0;  // stays finite after ratio underflows
    bool degenerate = false; // I_R + I_L itself underflows
};

// Norms of [-1/k, 1] sqrt(R), [1/k, 1] sqrt(R) and [0, 1] sqrt(R), the denominators
// of the reformed I_R, I_L, I_B arguments d / denominator.
struct ReformedDenominators
{
    double right = 0.0;
    double left = 0.0;
    double bottom = 0.0;
};

OutageRegime classify(const channel::AntennaConfig &ant, const channel::LinkConfig &link) noexcept;

// tan sqrt((theta_3db^2 / 1.2) lg(lambda^2 P_max / ((4 pi d)^2 gamma_th)))
double k_factor(const channel::AntennaConfig &ant, const channel::LinkConfig &link);

OutageEstimate outage_bounds(double k, double d, const gauss2d::Covariance2x2 &R);

TightnessRatio tightness_ratio(double k, double d, const gauss2d::Covariance2x2 &R);

ReformedDenominators reformed_denominators(double k, const gauss2d::Covariance2x2 &R);

// Regime-aware estimate: short-circuits the deterministic regimes to exactly 0 or 1 and
// bounds the rear wedge of a WideBeam link by min(I_R, I_L, I_B) (lower bound 0 or I_R + I_L - 1).
OutageEstimate estimate(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                        const gauss2d::Covariance2x2 &R);

} // namespace beamout::outage

#endif
