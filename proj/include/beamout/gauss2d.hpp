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

#ifndef BEAMOUT_GAUSS2D_HPP
#define BEAMOUT_GAUSS2D_HPP

// Bivariate Gaussian primitives for the positioning-error model.
//
// The estimated receiver position is p_hat ~ Normal(mean, R) with R a 2x2
// symmetric positive-definite covariance. R is parametrized either directly or
// through its principal standard deviations (sigma1 >= sigma2) and the
// orientation phi of the major axis: R = G(phi) diag(sigma1^2, sigma2^2) G(phi)^T.

#include <cstdint>

namespace beamout::gauss2d
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

// Principal-axis description of the error ellipse. phi is normalized to [0, pi).
class PositioningErrorModel
{
public:
    PositioningErrorModel(double sigma1, double sigma2, double phi);

    double sigma1() const noexcept { return sigma1_; }
    double sigma2() const noexcept { return sigma2_; }
    double phi() const noexcept { return phi_; }

private:
    double sigma1_;
    double sigma2_;
    double phi_;
};

// Plain symmetric 2x2 matrix [[m11, m12], [m12, m22]].
struct SymmetricMatrix2
{
    double m11 = 0.0;
    double m12 = 0.0;
    double m22 = 0.0;

    Point2 apply(Point2 v) const noexcept { return {m11 * v.x + m12 * v.y, m12 * v.x + m22 * v.y}; }
};

// Symmetric positive-definite covariance. Construction validates positive definiteness.
class Covariance2x2
{
public:
    Covariance2x2(double r11, double r12, double r22);

    double r11() const noexcept { return r11_; }
    double r12() const noexcept { return r12_; }
    double r22() const noexcept { return r22_; }

    double det() const noexcept { return r11_ * r22_ - r12_ * r12_; }
    double trace() const noexcept { return r11_ + r22_; }

    // v R v^T for a row vector v = (v1, v2)
    double quadratic_form(double v1, double v2) const noexcept
    {
        return v1 * v1 * r11_ + 2.0 * v1 * v2 * r12_ + v2 * v2 * r22_;
    }

    Covariance2x2 scaled(double c) const { return {c * r11_, c * r12_, c * r22_}; }

private:
    double r11_;
    double r12_;
    double r22_;
};

// Half-plane {p : a1 * p.x + a2 * p.y >= b}
class HalfPlane
{
public:
    HalfPlane(double a1, double a2, double b);

    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }
    double b() const noexcept { return b_; }

    HalfPlane complement() const { return {-a1_, -a2_, -b_}; }

private:
    double a1_;
    double a2_;
    double b_;
};

struct EigenDecomposition
{
    double lambda1 = 0.0; // larger eigenvalue
    double lambda2 = 0.0; // smaller eigenvalue
    double phi = 0.0;     // direction of the lambda1 eigenvector, in [0, pi)
};

Covariance2x2 covariance_from_model(const PositioningErrorModel &m);

EigenDecomposition eigen_decompose(const Covariance2x2 &R) noexcept;

// Symmetric spectral square root S with S * S = R.
SymmetricMatrix2 spectral_sqrt(const Covariance2x2 &R);

// Gaussian tail Q(x) = (1/sqrt(2 pi)) int_x^inf exp(-t^2/2) dt.
double q_function(double x) noexcept;

// log Q(x), finite for every finite x (no underflow in the far tail).
double log_q_function(double x) noexcept;

// erf(x) = 1 - 2 Q(x sqrt(2)). Absolute accuracy ~1e-16; relative accuracy degrades for |x| < 0.1.
double erf_function(double x) noexcept;

// Gaussian measure of the half-plane h under Normal(mean, R).
double halfplane_prob(const HalfPlane &h, Point2 mean, const Covariance2x2 &R) noexcept;

// Standard normal pair (Box-Muller over Philox4x32-10) at stream position `index`.
Point2 standard_normal_pair(std::uint64_t seed, std::uint64_t index) noexcept;

// Counter-based stream of Normal(mean, R) draws. Draw i depends only on (seed, i).
class GaussianStream
{
public:
    explicit GaussianStream(std::uint64_t seed, std::uint64_t first_index = 0) noexcept
        : seed_(seed), counter_(first_index) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t position() const noexcept { return counter_; }

    // Standard normal pair for the next counter value.
    Point2 next_standard() noexcept { return standard_normal_pair(seed_, counter_++); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

Point2 sample_gaussian(Point2 mean, const Covariance2x2 &R, GaussianStream &stream);

} // namespace beamout::gauss2d

#endif
