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

#ifndef BEAMOUT_ORACLE_HPP
#define BEAMOUT_ORACLE_HPP

// Ground-truth outage probability by two independent routes:
//  - deterministic conditional quadrature over the reduced region {|x_hat| >= k y_hat}
//  - Monte Carlo over the physical pipeline (pointing angle -> pattern gain -> received power),
//    which never uses k.

#include "beamout/channel.hpp"
#include "beamout/gauss2d.hpp"
#include "beamout/simd/kernels.hpp"

#include <cstdint>

namespace beamout::oracle
{

enum class Method
{
    Quadrature,
    MonteCarlo
};

const char *to_string(Method method) noexcept;

struct OracleResult
{
    double p_out = 0.0;
    double std_err = 0.0; // 0 for quadrature
    Method method = Method::Quadrature;
    double error_estimate = 0.0; // quadrature absolute error estimate
};

struct McConfig
{
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 1;
    unsigned n_streams = 1;
};

// Default absolute tolerance of the quadrature oracle.
inline constexpr double kDefaultQuadTol = 1e-12;

// Pr(|x_hat| >= k y_hat) for p_hat ~ Normal((0, d), R).
//
// Integrates over y_hat the conditional outage probability
//   Q((k y - mu(y)) / s) + Q((k y + mu(y)) / s),  mu(y) = r12 / r22 (y - d),  s^2 = det R / r22,
// on [0, d + 12 sqrt(r22)], and adds Pr(y_hat <= 0) = Q(d / sqrt(r22)).
// tol in [1e-14, 1e-4] is an absolute tolerance; panels are refined to 1e-12 relative
// accuracy where possible so that tiny probabilities keep their leading digits.
OracleResult outage_quadrature(double k, double d, const gauss2d::Covariance2x2 &R, double tol = kDefaultQuadTol);

// Pr(y_hat <= 0 and |x_hat| <= rear_slope |y_hat|): the outage region of a WideBeam link.
OracleResult rear_wedge_quadrature(double rear_slope, double d, const gauss2d::Covariance2x2 &R,
                                   double tol = kDefaultQuadTol);

// Regime-aware quadrature of the exact outage probability for a physical configuration.
OracleResult outage_probability(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                                const gauss2d::Covariance2x2 &R, double tol = kDefaultQuadTol);

// Seeded Monte Carlo of Pr(P_r <= gamma_th). Draw i uses Philox counter i, and the
// n_streams workers take contiguous blocks of [0, n_samples), so the result depends
// only on (seed, n_samples) and the active SIMD variant.
OracleResult outage_montecarlo(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                               const gauss2d::Covariance2x2 &R, const McConfig &mc);

OracleResult outage_montecarlo(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                               const gauss2d::Covariance2x2 &R, const McConfig &mc, const simd::Kernels &kernels);

// Standard error of an n-sample frequency estimate of probability p: sqrt(p (1 - p) / n).
double binomial_std_err(double p, std::uint64_t n) noexcept;

} // namespace beamout::oracle

#endif
