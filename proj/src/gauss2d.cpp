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

#include "beamout/gauss2d.hpp"

#include "beamout/error.hpp"
#include "beamout/philox.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace beamout::gauss2d
{

namespace
{
double normalize_half_turn(double phi)
{
    double r = std::fmod(phi, std::numbers::pi);
    if (r < 0.0)
        r += std::numbers::pi;
    if (r >= std::numbers::pi)
        r = 0.0;
    return r;
}
} // namespace

PositioningErrorModel::PositioningErrorModel(double sigma1, double sigma2, double phi)
    : sigma1_(sigma1), sigma2_(sigma2), phi_(0.0)
{
    if (!std::isfinite(sigma1) || !std::isfinite(sigma2) || !std::isfinite(phi))
        throw Error(Errc::invalid_model, "positioning error model: non-finite parameter");
    if (!(sigma2 > 0.0) || sigma1 < sigma2)
        throw Error(Errc::invalid_model, "positioning error model: requires sigma1 >= sigma2 > 0, got sigma1=" +
                                             std::to_string(sigma1) + " sigma2=" + std::to_string(sigma2));
    phi_ = normalize_half_turn(phi);
}

Covariance2x2::Covariance2x2(double r11, double r12, double r22)
    : r11_(r11), r12_(r12), r22_(r22)
{
    if (!std::isfinite(r11) || !std::isfinite(r12) || !std::isfinite(r22) || !(r11 > 0.0) || !(r22 > 0.0) ||
        !(det() > 0.0))
        throw Error(Errc::not_positive_definite, "covariance is not positive definite");
}

HalfPlane::HalfPlane(double a1, double a2, double b)
    : a1_(a1), a2_(a2), b_(b)
{
    if (a1 == 0.0 && a2 == 0.0)
        throw Error(Errc::degenerate_normal, "half-plane normal vector is zero");
    if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(b))
        throw Error(Errc::invalid_argument, "half-plane coefficients must be finite");
}

Covariance2x2 covariance_from_model(const PositioningErrorModel &m)
{
    const double c = std::cos(m.phi());
    const double s = std::sin(m.phi());
    const double v1 = m.sigma1() * m.sigma1();
    const double v2 = m.sigma2() * m.sigma2();
    return {v1 * c * c + v2 * s * s, (v1 - v2) * c * s, v1 * s * s + v2 * c * c};
}

EigenDecomposition eigen_decompose(const Covariance2x2 &R) noexcept
{
    const double mean = 0.5 * (R.r11() + R.r22());
    const double half_gap = std::hypot(0.5 * (R.r11() - R.r22()), R.r12());
    EigenDecomposition e;
    e.lambda1 = mean + half_gap;
    e.lambda2 = mean - half_gap;
    e.phi = normalize_half_turn(0.5 * std::atan2(2.0 * R.r12(), R.r11() - R.r22()));
    return e;
}

SymmetricMatrix2 spectral_sqrt(const Covariance2x2 &R)
{
    // For 2x2 SPD matrices, sqrt(R) = (R + sqrt(det R) I) / sqrt(tr R + 2 sqrt(det R)),
    // which equals G diag(sigma1, sigma2) G^T.
    const double s = std::sqrt(R.det());
    const double t = std::sqrt(R.trace() + 2.0 * s);
    return {(R.r11() + s) / t, R.r12() / t, (R.r22() + s) / t};
}

double q_function(double x) noexcept
{
    // x / sqrt(2) as hi + lo: the rounding of the argument alone would cost x^2 ulp in the tail
    constexpr double kRootHalfHi = 0.7071067811865476;
    constexpr double kRootHalfLo = -4.833646656726457e-17;
    const double hi = x * kRootHalfHi;
    const double lo = std::fma(x, kRootHalfHi, -hi) + x * kRootHalfLo;
    const double e = std::erfc(hi);
    if (e == 0.0 || e == 2.0)
        return 0.5 * e;
    return 0.5 * (e - lo * (2.0 / std::sqrt(std::numbers::pi)) * std::exp(-hi * hi));
}

double log_q_function(double x) noexcept
{
    if (x < 20.0)
        return std::log(q_function(x));
    // Q(x) = phi(x) / (x + 1/(x + 2/(x + 3/(x + ...))))
    double tail = x;
    for (int n = 40; n >= 1; --n)
        tail = x + n / tail;
    return -0.5 * x * x - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(tail);
}

double erf_function(double x) noexcept
{
    if (x < 0.0)
        return -erf_function(-x);
    return 1.0 - 2.0 * q_function(x * std::numbers::sqrt2);
}

double halfplane_prob(const HalfPlane &h, Point2 mean, const Covariance2x2 &R) noexcept
{
    const double spread = std::sqrt(R.quadratic_form(h.a1(), h.a2()));
    return q_function((h.b() - (h.a1() * mean.x + h.a2() * mean.y)) / spread);
}

Point2 standard_normal_pair(std::uint64_t seed, std::uint64_t index) noexcept
{
    const auto u = Philox4x32::uniform_pair(seed, index);
    const double radius = std::sqrt(-2.0 * std::log(u[0]));
    const double angle = 2.0 * std::numbers::pi * u[1];
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

Point2 sample_gaussian(Point2 mean, const Covariance2x2 &R, GaussianStream &stream)
{
    const SymmetricMatrix2 S = spectral_sqrt(R);
    const Point2 z = S.apply(stream.next_standard());
    return {mean.x + z.x, mean.y + z.y};
}

} // namespace beamout::gauss2d
