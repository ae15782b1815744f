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

#include "beamout/error.hpp"
#include "beamout/oracle.hpp"
#include "beamout/outage.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace beamout;
using namespace beamout::outage;
using beamout::channel::AntennaConfig;
using beamout::channel::LinkConfig;
using beamout::gauss2d::Covariance2x2;

namespace
{

// k from the critical-angle formula in long double
long double k_reference(long double theta, long double p_max, long double lambda, long double d, long double gamma)
{
    const long double spread = 4.0L * std::numbers::pi_v<long double> * d;
    const long double arg = lambda * lambda * p_max / (spread * spread * gamma);
    return std::tan(std::sqrt(theta * theta / 1.2L * std::log10(arg)));
}

Covariance2x2 random_covariance(std::mt19937_64 &rng, double lo = 0.1, double hi = 3.0)
{
    std::uniform_real_distribution<double> s(lo, hi), ang(0.0, std::numbers::pi);
    double a = s(rng), b = s(rng);
    if (a < b)
        std::swap(a, b);
    return gauss2d::covariance_from_model(gauss2d::PositioningErrorModel(a, b, ang(rng)));
}

double q(double x) { return static_cast<double>(oracles::q_tail(x)); }

} // namespace

TEST(Classify, DistanceSweepRegimes)
{
    const AntennaConfig ant(0.1, 1e-4, 100.0);
    const LinkConfig link(30.0, 0.05, 1e-7);
    const OutageRegime r = classify(ant, link);
    ASSERT_EQ(r.kind, RegimeKind::Probabilistic);
    EXPECT_NEAR(r.k, 0.1022, 5e-5);
    EXPECT_NEAR(r.k, static_cast<double>(k_reference(0.1L, 100.0L, 0.05L, 30.0L, 1e-7L)), 1e-15);
    EXPECT_DOUBLE_EQ(k_factor(ant, link), r.k);

    // boresight power equals the threshold near 125.8 m, the side-lobe floor clears it below 1.258 m
    EXPECT_EQ(classify(ant, link.with_d(126.0)).kind, RegimeKind::AlwaysOutage);
    EXPECT_EQ(classify(ant, link.with_d(125.5)).kind, RegimeKind::Probabilistic);
    EXPECT_EQ(classify(ant, link.with_d(1.25)).kind, RegimeKind::AlwaysCovered);
    EXPECT_EQ(classify(ant, link.with_d(1.27)).kind, RegimeKind::Probabilistic);
}

TEST(Classify, BoundariesAreExact)
{
    // lambda = 4 pi, d = 1 makes the path gain exactly 1
    const LinkConfig unit(1.0, 4.0 * std::numbers::pi, 2.0);
    ASSERT_EQ(channel::friis_gain(unit), 1.0);
    EXPECT_EQ(classify(AntennaConfig(0.1, 1e-2, 2.0), unit).kind, RegimeKind::AlwaysOutage);
    EXPECT_EQ(classify(AntennaConfig(0.1, 1e-2, 200.0), unit).kind, RegimeKind::AlwaysCovered);
    EXPECT_EQ(classify(AntennaConfig(0.1, 1e-2, 199.0), unit).kind, RegimeKind::Probabilistic);
    try
    {
        k_factor(AntennaConfig(0.1, 1e-2, 2.0), unit);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::wrong_regime);
    }
}

TEST(Classify, WideBeamAndWraparound)
{
    const LinkConfig unit(1.0, 4.0 * std::numbers::pi, 1.0);
    // lg margin = 1: critical angle theta_3db / sqrt(1.2)
    const double theta = 2.0 * std::sqrt(1.2); // critical angle 2 rad
    const OutageRegime r = classify(AntennaConfig(theta, 1e-3, 10.0), unit);
    ASSERT_EQ(r.kind, RegimeKind::WideBeam);
    EXPECT_NEAR(r.critical_angle, 2.0, 1e-14);
    EXPECT_NEAR(r.rear_slope, std::tan(std::numbers::pi - 2.0), 1e-14);
    EXPECT_GT(r.rear_slope, 0.0);
    try
    {
        k_factor(AntennaConfig(theta, 1e-3, 10.0), unit);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::beam_wraparound);
    }
    // critical angle past pi: the main lobe covers every direction
    EXPECT_EQ(classify(AntennaConfig(4.0 * std::sqrt(1.2), 1e-3, 10.0), unit).kind, RegimeKind::AlwaysCovered);
}

TEST(KFactor, Properties)
{
    const LinkConfig unit(1.0, 4.0 * std::numbers::pi, 1.0);
    EXPECT_NEAR(k_factor(AntennaConfig(0.3, 1e-3, 10.0), unit), std::tan(0.3 / std::sqrt(1.2)), 1e-15);
    EXPECT_LT(k_factor(AntennaConfig(1e-9, 1e-3, 10.0), unit), 1e-8);

    double prev_theta = 0.0, prev_p = 0.0;
    for (int i = 1; i <= 50; ++i)
    {
        const double kt = k_factor(AntennaConfig(0.02 * i, 1e-3, 10.0), unit);
        const double kp = k_factor(AntennaConfig(0.1, 1e-3, 1.0 + 10.0 * i), unit);
        EXPECT_GT(kt, prev_theta);
        EXPECT_GT(kp, prev_p);
        prev_theta = kt;
        prev_p = kp;
    }
}

TEST(OutageBounds, IsotropicUnitSlope)
{
    for (double ratio : {0.5, 1.0, 3.0, 7.0})
    {
        const double sigma = 2.0, d = ratio * sigma;
        const OutageEstimate e = outage_bounds(1.0, d, Covariance2x2(sigma * sigma, 0.0, sigma * sigma));
        const double half = q(d / (sigma * std::sqrt(2.0)));
        EXPECT_NEAR(e.i_r / half, 1.0, 1e-13);
        EXPECT_NEAR(e.i_l / half, 1.0, 1e-13);
        EXPECT_NEAR(e.i_b / q(ratio), 1.0, 1e-13);
        EXPECT_NEAR(e.upper, std::min(1.0, 2.0 * half), 1e-15);
        EXPECT_NEAR(e.lower, std::max(0.0, std::min(1.0, 2.0 * half) - std::max(0.0, 2.0 * half - 1.0 < 0 ? q(ratio) : q(ratio))),
                    1e-15);
    }
}

TEST(OutageBounds, ComponentsAreHalfPlaneMeasures)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> kd(0.05, 3.0), dd(0.5, 6.0);
    for (int i = 0; i < 10; ++i)
    {
        const Covariance2x2 R = random_covariance(rng);
        const double k = kd(rng), d = dd(rng);
        const OutageEstimate e = outage_bounds(k, d, R);
        const oracles::Gauss2 g{0.0, d, R.r11(), R.r12(), R.r22()};
        EXPECT_NEAR(e.i_r, oracles::halfplane_2d(1.0, -k, 0.0, g), 1e-9);
        EXPECT_NEAR(e.i_l, oracles::halfplane_2d(-1.0, -k, 0.0, g), 1e-9);
        EXPECT_NEAR(e.i_b, oracles::halfplane_2d(0.0, -1.0, 0.0, g), 1e-9);
    }
}

TEST(OutageBounds, SandwichAgainstDensityIntegral)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> kd(0.05, 2.0), dd(0.3, 5.0);
    for (int i = 0; i < 20; ++i)
    {
        const Covariance2x2 R = random_covariance(rng);
        const double k = kd(rng), d = dd(rng);
        const OutageEstimate e = outage_bounds(k, d, R);
        const double exact = oracles::outage_2d(k, d, R.r11(), R.r12(), R.r22());
        EXPECT_LE(e.lower, exact + 1e-10);
        EXPECT_GE(e.upper, exact - 1e-10);
        EXPECT_LE(e.lower, e.upper);
    }
}

TEST(OutageBounds, Validates)
{
    const Covariance2x2 R(1.0, 0.0, 1.0);
    EXPECT_THROW(outage_bounds(0.0, 1.0, R), Error);
    EXPECT_THROW(outage_bounds(-1.0, 1.0, R), Error);
    EXPECT_THROW(outage_bounds(1.0, 0.0, R), Error);
    EXPECT_THROW(outage_bounds(NAN, 1.0, R), Error);
}

TEST(OutageBounds, ReformedDenominatorsReproduceComponents)
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> kd(0.05, 3.0), dd(0.5, 8.0);
    for (int i = 0; i < 500; ++i)
    {
        const Covariance2x2 R = random_covariance(rng);
        const double k = kd(rng), d = dd(rng);
        const OutageEstimate e = outage_bounds(k, d, R);
        const ReformedDenominators den = reformed_denominators(k, R);
        // the two routes round z differently; a relative change eps in z moves Q(z) by about z^2 eps
        auto tol = [](double z, double p) { return (1e-14 + 4e-15 * z * z) * p + 1e-300; };
        EXPECT_NEAR(gauss2d::q_function(d / den.right), e.i_r, tol(d / den.right, e.i_r));
        EXPECT_NEAR(gauss2d::q_function(d / den.left), e.i_l, tol(d / den.left, e.i_l));
        EXPECT_NEAR(gauss2d::q_function(d / den.bottom), e.i_b, tol(d / den.bottom, e.i_b));
    }
}

TEST(OutageBounds, QuadraticFormDominanceProperty)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> kd(0.01, 20.0);
    for (int i = 0; i < 1000; ++i)
    {
        const Covariance2x2 R = random_covariance(rng, 0.01, 5.0);
        const double k = kd(rng);
        const ReformedDenominators den = reformed_denominators(k, R);
        EXPECT_GT(std::max(den.right, den.left), den.bottom);
        // the two forms sum to 2 r11 / k^2 + 2 r22
        EXPECT_NEAR(den.right * den.right + den.left * den.left, 2.0 * R.r11() / (k * k) + 2.0 * R.r22(),
                    1e-12 * (R.r11() / (k * k) + R.r22()));
    }
}

TEST(OutageBounds, QRatioLimitProperty)
{
    for (double alpha : {1.1, 1.5, 2.0})
    {
        double prev = INFINITY;
        for (double t : {2.0, 4.0, 6.0, 8.0})
        {
            const double ratio = gauss2d::q_function(alpha * t) / gauss2d::q_function(t);
            EXPECT_LT(ratio, prev);
            prev = ratio;
        }
    }
    double prev = 0.0;
    for (double t : {2.0, 4.0, 6.0, 8.0})
    {
        const double ratio = gauss2d::q_function(0.9 * t) / gauss2d::q_function(t);
        EXPECT_GT(ratio, prev);
        prev = ratio;
    }
}

TEST(OutageBounds, ArgumentsIncreaseWithKWhereSlopeAllows)
{
    // d/dk of k d / sqrt(q_R) has the sign of r11 - k r12 (and r11 + k r12 for q_L), so the
    // arguments grow with k wherever k |r12| < r11
    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i)
    {
        const Covariance2x2 R = random_covariance(rng);
        const double d = 10.0;
        const double k_cap = std::abs(R.r12()) > 0 ? std::min(5.0, R.r11() / std::abs(R.r12())) : 5.0;
        double prev_r = 0.0, prev_l = 0.0, prev_upper = 1.0;
        for (int j = 1; j <= 20; ++j)
        {
            const double k = k_cap * j / 21.0;
            const ReformedDenominators den = reformed_denominators(k, R);
            const double zr = d / den.right, zl = d / den.left;
            EXPECT_GT(zr, prev_r);
            EXPECT_GT(zl, prev_l);
            const double upper = outage_bounds(k, d, R).upper;
            EXPECT_LE(upper, prev_upper + 1e-15);
            prev_r = zr;
            prev_l = zl;
            prev_upper = upper;
        }
    }
    // beyond that slope a half-plane measure can grow with k even though the outage region shrinks
    const Covariance2x2 R(1.0, 0.9, 1.0);
    EXPECT_GT(outage_bounds(3.0, 2.0, R).i_r, outage_bounds(2.0, 2.0, R).i_r);
}

TEST(Tightness, IsotropicCaseDecreasesWithDistance)
{
    const double sigma = 1.5;
    const Covariance2x2 R(sigma * sigma, 0.0, sigma * sigma);
    double prev = INFINITY;
    for (double ratio : {5.0, 10.0, 20.0, 40.0, 80.0})
    {
        const TightnessRatio t = tightness_ratio(1.0, ratio * sigma, R);
        // at 80 sigma every term underflows; the log ratio still orders the sequence
        EXPECT_EQ(t.degenerate, ratio > 40.0);
        EXPECT_LT(t.log_ratio, prev);
        EXPECT_NEAR(std::exp(t.log_ratio), t.ratio, 1e-15 * t.ratio);
        prev = t.log_ratio;
        if (ratio <= 20.0)
        {
                const double ref = q(ratio) / (2.0 * q(ratio / std::sqrt(2.0)));
            EXPECT_NEAR(t.ratio / ref, 1.0, 1e-11);
        }
    }
    EXPECT_LT(tightness_ratio(1.0, 40.0 * sigma, R).ratio, 1e-3);
}

TEST(Tightness, ShrinkingCovariance)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i)
    {
        const Covariance2x2 R = random_covariance(rng, 0.5, 2.0);
        const double k = 0.5, d = 3.0;
        const double r1 = tightness_ratio(k, d, R).ratio;
        const double r4 = tightness_ratio(k, d, R.scaled(0.25)).ratio;
        const double r16 = tightness_ratio(k, d, R.scaled(1.0 / 16.0)).ratio;
        EXPECT_GT(r1, r4);
        EXPECT_GT(r4, r16);
    }
}

TEST(Estimate, DeterministicRegimesShortCircuit)
{
    const LinkConfig link(30.0, 0.05, 1e-7);
    const Covariance2x2 R(1.0, 0.0, 0.25);
    const OutageEstimate out = estimate(AntennaConfig(0.1, 1e-4, 1.0), link, R);
    EXPECT_EQ(out.regime.kind, RegimeKind::AlwaysOutage);
    EXPECT_EQ(out.lower, 1.0);
    EXPECT_EQ(out.upper, 1.0);
    const OutageEstimate cov = estimate(AntennaConfig(0.1, 1e-4, 1e7), link, R);
    EXPECT_EQ(cov.regime.kind, RegimeKind::AlwaysCovered);
    EXPECT_EQ(cov.lower, 0.0);
    EXPECT_EQ(cov.upper, 0.0);
}

TEST(Estimate, WideBeamBoundsHoldRearWedge)
{
    const LinkConfig unit(1.0, 4.0 * std::numbers::pi, 1.0);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ang(1.7, 3.0);
    for (int i = 0; i < 10; ++i)
    {
        const double crit = ang(rng);
        const AntennaConfig ant(crit * std::sqrt(1.2), 1e-3, 10.0);
        const Covariance2x2 R = random_covariance(rng, 0.3, 1.5).scaled(1.0 / (1.0 + i));
        const OutageEstimate e = estimate(ant, unit, R);
        ASSERT_EQ(e.regime.kind, RegimeKind::WideBeam);
        const double exact = oracles::rear_wedge_2d(e.regime.rear_slope, 1.0, R.r11(), R.r12(), R.r22());
        EXPECT_LE(e.lower, exact + 1e-10);
        EXPECT_GE(e.upper, exact - 1e-10);
        EXPECT_TRUE(std::isnan(e.tightness_ratio));
    }
}
