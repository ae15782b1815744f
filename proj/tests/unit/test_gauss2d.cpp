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
#include "beamout/gauss2d.hpp"
#include "beamout/philox.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace beamout;
using namespace beamout::gauss2d;

namespace
{

Covariance2x2 random_covariance(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> s(0.05, 3.0), ang(0.0, std::numbers::pi);
    double a = s(rng), b = s(rng);
    if (a < b)
        std::swap(a, b);
    return covariance_from_model(PositioningErrorModel(a, b, ang(rng)));
}

} // namespace

TEST(PositioningErrorModel, Validates)
{
    EXPECT_NO_THROW(PositioningErrorModel(1.0, 1.0, 0.0));
    EXPECT_THROW(PositioningErrorModel(0.5, 1.0, 0.0), Error);
    EXPECT_THROW(PositioningErrorModel(1.0, 0.0, 0.0), Error);
    EXPECT_THROW(PositioningErrorModel(1.0, -0.5, 0.0), Error);
    EXPECT_THROW(PositioningErrorModel(NAN, 0.5, 0.0), Error);
    try
    {
        PositioningErrorModel(0.5, 1.0, 0.0);
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::invalid_model);
    }
}

TEST(PositioningErrorModel, PhiWrapsToHalfTurn)
{
    EXPECT_NEAR(PositioningErrorModel(1, 0.5, std::numbers::pi + 0.25).phi(), 0.25, 1e-15);
    EXPECT_NEAR(PositioningErrorModel(1, 0.5, -0.25).phi(), std::numbers::pi - 0.25, 1e-15);
}

TEST(Covariance, FromModelAxes)
{
    const auto r0 = covariance_from_model(PositioningErrorModel(2.0, 1.0, 0.0));
    EXPECT_DOUBLE_EQ(r0.r11(), 4.0);
    EXPECT_NEAR(r0.r12(), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(r0.r22(), 1.0);

    const auto r90 = covariance_from_model(PositioningErrorModel(2.0, 1.0, std::numbers::pi / 2));
    EXPECT_NEAR(r90.r11(), 1.0, 1e-14);
    EXPECT_NEAR(r90.r22(), 4.0, 1e-14);

    // 45 degrees: r11 = r22 = (s1^2 + s2^2)/2, r12 = (s1^2 - s2^2)/2
    const auto r45 = covariance_from_model(PositioningErrorModel(2.0, 1.0, std::numbers::pi / 4));
    EXPECT_NEAR(r45.r11(), 2.5, 1e-14);
    EXPECT_NEAR(r45.r12(), 1.5, 1e-14);
    EXPECT_NEAR(r45.r22(), 2.5, 1e-14);
}

TEST(Covariance, RejectsIndefinite)
{
    EXPECT_THROW(Covariance2x2(1.0, 1.0, 1.0), Error);
    EXPECT_THROW(Covariance2x2(1.0, 0.0, -1.0), Error);
    EXPECT_THROW(Covariance2x2(1.0, 2.0, 1.0), Error);
    EXPECT_NO_THROW(Covariance2x2(1.0, 0.999, 1.0));
}

TEST(Covariance, EigenRoundTripProperty)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> s(0.01, 10.0), ang(0.0, std::numbers::pi);
    for (int i = 0; i < 500; ++i)
    {
        double a = s(rng), b = s(rng);
        if (a < b)
            std::swap(a, b);
        const double phi = ang(rng);
        const auto R = covariance_from_model(PositioningErrorModel(a, b, phi));
        const auto e = eigen_decompose(R);
        EXPECT_NEAR(e.lambda1, a * a, 1e-12 * a * a);
        EXPECT_NEAR(e.lambda2, b * b, 1e-10 * a * a);
        EXPECT_NEAR(e.lambda1 * e.lambda2, R.det(), 1e-10 * R.det() + 1e-12 * a * a * a * a);
        if (a / b > 1.01)
        {
            const double dphi = std::remainder(e.phi - phi, std::numbers::pi);
            EXPECT_NEAR(dphi, 0.0, 1e-8);
        }
    }
}

TEST(Covariance, SpectralSqrtSquaresBack)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i)
    {
        const auto R = random_covariance(rng);
        const auto S = spectral_sqrt(R);
        const double tol = 1e-13 * R.trace();
        EXPECT_NEAR(S.m11 * S.m11 + S.m12 * S.m12, R.r11(), tol);
        EXPECT_NEAR(S.m11 * S.m12 + S.m12 * S.m22, R.r12(), tol);
        EXPECT_NEAR(S.m12 * S.m12 + S.m22 * S.m22, R.r22(), tol);
        EXPECT_GT(S.m11 * S.m22 - S.m12 * S.m12, 0.0);
    }
}

TEST(HalfPlane, RejectsZeroNormal)
{
    try
    {
        HalfPlane(0.0, 0.0, 1.0);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::degenerate_normal);
    }
    EXPECT_THROW(HalfPlane(INFINITY, 1.0, 0.0), Error);
}

TEST(QFunction, KnownValues)
{
    // tabulated standard normal upper tail
    EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
    EXPECT_NEAR(q_function(1.0), 0.15865525393145705, 1e-16);
    EXPECT_NEAR(q_function(-1.0), 0.84134474606854295, 2.3e-16);
    EXPECT_NEAR(q_function(3.0) / 1.3498980316300946e-3, 1.0, 1e-14);
    EXPECT_NEAR(q_function(10.0) / 7.6198530241604696e-24, 1.0, 1e-13);
}

TEST(QFunction, MatchesExtendedPrecisionTail)
{
    for (double x = -8.0; x <= 30.0; x += 0.37)
    {
        const double ref = static_cast<double>(oracles::q_tail(x));
        EXPECT_NEAR(q_function(x) / ref, 1.0, 1e-13) << "x=" << x;
    }
}

TEST(QFunction, SymmetryProperty)
{
    for (double x = -6.0; x <= 6.0; x += 0.01)
        EXPECT_NEAR(q_function(x) + q_function(-x), 1.0, 2e-16);
}

TEST(QFunction, LogTailFinite)
{
    for (double x = -5.0; x < 19.0; x += 0.5)
        EXPECT_NEAR(log_q_function(x), std::log(q_function(x)), 1e-12 * std::max(1.0, std::abs(std::log(q_function(x)))));
    // Mills-ratio asymptote: log Q(x) ~ -x^2/2 - log(x sqrt(2 pi)) - 1/x^2
    for (double x : {40.0, 100.0, 1e3})
    {
        const double approx = -0.5 * x * x - std::log(x * std::sqrt(2.0 * std::numbers::pi)) - 1.0 / (x * x);
        EXPECT_NEAR(log_q_function(x), approx, 3.0 / std::pow(x, 4));
    }
    EXPECT_TRUE(std::isfinite(log_q_function(1e5)));
    // continuity across the switch to the continued fraction
    EXPECT_NEAR(log_q_function(20.0 - 1e-12), log_q_function(20.0), 1e-10);
}

TEST(ErfFunction, MatchesStd)
{
    for (double x = -4.0; x <= 4.0; x += 0.05)
        EXPECT_NEAR(erf_function(x), std::erf(x), 3e-16);
    EXPECT_EQ(erf_function(0.0), 0.0);
    EXPECT_EQ(erf_function(-0.7), -erf_function(0.7));
}

TEST(HalfPlaneProb, MatchesDensityIntegral)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-2.0, 2.0), off(-4.0, 4.0);
    for (int i = 0; i < 12; ++i)
    {
        const auto R = random_covariance(rng);
        const Point2 m{off(rng), off(rng)};
        const double a1 = coef(rng), a2 = coef(rng), b = off(rng);
        const double ref = oracles::halfplane_2d(a1, a2, b, {m.x, m.y, R.r11(), R.r12(), R.r22()});
        EXPECT_NEAR(halfplane_prob(HalfPlane(a1, a2, b), m, R), ref, 1e-9);
    }
}

TEST(HalfPlaneProb, ComplementAndScalingProperties)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0), off(-3.0, 3.0), scale(0.1, 10.0);
    for (int i = 0; i < 300; ++i)
    {
        const auto R = random_covariance(rng);
        const Point2 m{off(rng), off(rng)};
        const HalfPlane h(coef(rng), coef(rng), off(rng));
        const double p = halfplane_prob(h, m, R);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
        EXPECT_NEAR(p + halfplane_prob(h.complement(), m, R), 1.0, 1e-15);
        const double c = scale(rng);
        EXPECT_NEAR(halfplane_prob(HalfPlane(c * h.a1(), c * h.a2(), c * h.b()), m, R), p, 1e-14);
    }
}

TEST(Philox, KnownAnswerVectors)
{
    // reference outputs of the Philox4x32-10 generator
    using C = Philox4x32::Counter;
    EXPECT_EQ(Philox4x32::generate({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, UniformsInOpenInterval)
{
    for (std::uint64_t i = 0; i < 10000; ++i)
    {
        const auto u = Philox4x32::uniform_pair(3, i);
        EXPECT_GT(u[0], 0.0);
        EXPECT_LT(u[0], 1.0);
        EXPECT_GT(u[1], 0.0);
        EXPECT_LT(u[1], 1.0);
    }
}

TEST(GaussianStream, CounterAddressable)
{
    GaussianStream a(42), b(42, 500);
    for (int i = 0; i < 500; ++i)
        a.next_standard();
    EXPECT_EQ(a.position(), 500u);
    for (int i = 0; i < 100; ++i)
    {
        const Point2 p = a.next_standard(), q = b.next_standard();
        EXPECT_EQ(p.x, q.x);
        EXPECT_EQ(p.y, q.y);
    }
    const Point2 s1 = standard_normal_pair(1, 0), s2 = standard_normal_pair(2, 0);
    EXPECT_NE(s1.x, s2.x);
}

TEST(GaussianStream, SampleMomentsMatchCovariance)
{
    const Covariance2x2 R = covariance_from_model(PositioningErrorModel(2.0, 0.5, 0.6));
    const Point2 mean{1.0, 30.0};
    GaussianStream stream(9);
    const int n = 400000;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i)
    {
        const Point2 p = sample_gaussian(mean, R, stream);
        const double u = p.x - mean.x, v = p.y - mean.y;
        sx += u;
        sy += v;
        sxx += u * u;
        sxy += u * v;
        syy += v * v;
    }
    // 5-sigma sampling tolerances
    EXPECT_NEAR(sx / n, 0.0, 5.0 * std::sqrt(R.r11() / n));
    EXPECT_NEAR(sy / n, 0.0, 5.0 * std::sqrt(R.r22() / n));
    EXPECT_NEAR(sxx / n, R.r11(), 5.0 * R.r11() * std::sqrt(2.0 / n));
    EXPECT_NEAR(syy / n, R.r22(), 5.0 * R.r22() * std::sqrt(2.0 / n));
    EXPECT_NEAR(sxy / n, R.r12(), 5.0 * std::sqrt((R.r11() * R.r22() + R.r12() * R.r12()) / n));
}
