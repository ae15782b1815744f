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

#include "beamout/oracle.hpp"

#include "beamout/error.hpp"
#include "beamout/outage.hpp"
#include "beamout/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace beamout::oracle
{

namespace
{

constexpr double kWindow = 12.0;     // half-width of the y_hat window in units of sqrt(r22)
constexpr double kPanelRelTol = 1e-12;
constexpr int kPanelMaxIntervals = 2000;
constexpr double kMaxPanels = 4000.0;
constexpr std::size_t kMcChunk = 1024;

void check_tolerance(double tol)
{
    if (!(tol >= 1e-14 && tol <= 1e-4))
        throw Error(Errc::invalid_argument, "quadrature tolerance must lie in [1e-14, 1e-4]");
}

// Phi(hi) - Phi(lo) for lo <= hi without cancellation in either tail
double normal_mass_between(double lo, double hi)
{
    using gauss2d::q_function;
    if (lo >= 0.0)
        return q_function(lo) - q_function(hi);
    if (hi <= 0.0)
        return q_function(-hi) - q_function(-lo);
    return 1.0 - q_function(hi) - q_function(-lo);
}

struct Conditional
{
    double d;
    double sigma_y;
    double slope;       // r12 / r22
    double sigma_cond;  // sqrt(det R / r22)

    Conditional(double d_, const gauss2d::Covariance2x2 &R)
        : d(d_), sigma_y(std::sqrt(R.r22())), slope(R.r12() / R.r22()), sigma_cond(std::sqrt(R.det() / R.r22()))
    {
    }

    double density(double y) const
    {
        const double u = (y - d) / sigma_y;
        return std::exp(-0.5 * u * u) / (sigma_y * std::sqrt(2.0 * std::numbers::pi));
    }

    double mean_x(double y) const { return slope * (y - d); }
};

// Adds int_lo^hi f over panels no wider than sigma_y.
template <class F>
void integrate_panels(F &&f, double lo, double hi, double width, double &value, double &error)
{
    if (!(hi > lo))
        return;
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    const double step = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p)
    {
        const double a = lo + p * step;
        const double b = p + 1 == panels ? hi : a + step;
        const quadrature::Result r =
            quadrature::integrate(f, a, b, {0.0, kPanelRelTol, kPanelMaxIntervals});
        value += r.value;
        error += r.error;
    }
}

OracleResult finish(double value, double error, double tol)
{
    if (!(error <= tol))
        throw Error(Errc::tolerance_not_met, "quadrature error estimate " + std::to_string(error) +
                                                 " exceeds tolerance " + std::to_string(tol));
    return {std::clamp(value, 0.0, 1.0), 0.0, Method::Quadrature, error};
}

} // namespace

const char *to_string(Method method) noexcept
{
    return method == Method::Quadrature ? "Quadrature" : "MonteCarlo";
}

OracleResult outage_quadrature(double k, double d, const gauss2d::Covariance2x2 &R, double tol)
{
    check_tolerance(tol);
    if (!(std::isfinite(k) && k > 0.0) || !(std::isfinite(d) && d >= 0.0))
        throw Error(Errc::invalid_argument, "outage quadrature: requires k > 0 and d >= 0");

    const Conditional c(d, R);
    auto outage_given_y = [&](double y) {
        const double mu = c.mean_x(y);
        const double reach = k * y;
        return c.density(y) *
               (gauss2d::q_function((reach - mu) / c.sigma_cond) + gauss2d::q_function((reach + mu) / c.sigma_cond));
    };

    double value = gauss2d::q_function(d / c.sigma_y); // y_hat <= 0 is entirely in outage
    double error = 0.0;
    // the far tail of the outage mass sits near the wedge edges, well below d for large k d / sigma,
    // so the window keeps all of 0 < y_hat < d
    const double hi = d + kWindow * c.sigma_y;
    integrate_panels(outage_given_y, 0.0, hi, std::max(c.sigma_y, hi / kMaxPanels), value, error);
    return finish(value, error, tol);
}

OracleResult rear_wedge_quadrature(double rear_slope, double d, const gauss2d::Covariance2x2 &R, double tol)
{
    check_tolerance(tol);
    if (!(rear_slope >= 0.0) || !(std::isfinite(d) && d >= 0.0))
        throw Error(Errc::invalid_argument, "rear wedge quadrature: requires rear_slope >= 0 and d >= 0");

    const Conditional c(d, R);
    auto outage_given_y = [&](double y) {
        const double mu = c.mean_x(y);
        const double reach = rear_slope * -y;
        return c.density(y) * normal_mass_between((-reach - mu) / c.sigma_cond, (reach - mu) / c.sigma_cond);
    };

    double value = 0.0;
    double error = 0.0;
    // beyond 12 sigma below min(d, 0) the density has fallen by more than e^-72 from its value at y_hat = 0
    const double lo = std::min(d, 0.0) - kWindow * c.sigma_y;
    integrate_panels(outage_given_y, lo, 0.0, c.sigma_y, value, error);
    return finish(value, error, tol);
}

OracleResult outage_probability(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                                const gauss2d::Covariance2x2 &R, double tol)
{
    check_tolerance(tol);
    const outage::OutageRegime regime = outage::classify(ant, link);
    switch (regime.kind)
    {
    case outage::RegimeKind::AlwaysOutage: return {1.0, 0.0, Method::Quadrature, 0.0};
    case outage::RegimeKind::AlwaysCovered: return {0.0, 0.0, Method::Quadrature, 0.0};
    case outage::RegimeKind::Probabilistic: return outage_quadrature(regime.k, link.d(), R, tol);
    case outage::RegimeKind::WideBeam: return rear_wedge_quadrature(regime.rear_slope, link.d(), R, tol);
    }
    return {};
}

double binomial_std_err(double p, std::uint64_t n) noexcept
{
    if (n == 0)
        return 0.0;
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

OracleResult outage_montecarlo(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                               const gauss2d::Covariance2x2 &R, const McConfig &mc)
{
    return outage_montecarlo(ant, link, R, mc, simd::active_kernels());
}

OracleResult outage_montecarlo(const channel::AntennaConfig &ant, const channel::LinkConfig &link,
                               const gauss2d::Covariance2x2 &R, const McConfig &mc, const simd::Kernels &kernels)
{
    if (mc.n_samples == 0)
        throw Error(Errc::invalid_argument, "Monte Carlo: n_samples must be >= 1");

    const gauss2d::SymmetricMatrix2 S = gauss2d::spectral_sqrt(R);
    const simd::Affine2 transform{S.m11, S.m12, S.m22, 0.0, link.d()};
    const simd::PowerModel model{ant, link};

    auto count_block = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<double> z1(kMcChunk), z2(kMcChunk), x(kMcChunk), y(kMcChunk);
        std::uint64_t count = 0;
        for (std::uint64_t i = begin; i < end; i += kMcChunk)
        {
            const std::size_t m = static_cast<std::size_t>(std::min<std::uint64_t>(kMcChunk, end - i));
            for (std::size_t j = 0; j < m; ++j)
            {
                const gauss2d::Point2 z = gauss2d::standard_normal_pair(mc.seed, i + j);
                z1[j] = z.x;
                z2[j] = z.y;
            }
            const std::span<const double> a(z1.data(), m), b(z2.data(), m);
            const std::span<double> xs(x.data(), m), ys(y.data(), m);
            kernels.affine(a, b, transform, xs, ys);
            count += kernels.count_outage(xs, ys, model);
        }
        return count;
    };

    const unsigned streams =
        static_cast<unsigned>(std::clamp<std::uint64_t>(mc.n_streams == 0 ? 1 : mc.n_streams, 1, mc.n_samples));
    std::vector<std::uint64_t> counts(streams, 0);
    {
        std::vector<std::jthread> workers;
        for (unsigned s = 1; s < streams; ++s)
            workers.emplace_back([&, s] {
                counts[s] = count_block(mc.n_samples * s / streams, mc.n_samples * (s + 1) / streams);
            });
        counts[0] = count_block(0, mc.n_samples / streams);
    }

    std::uint64_t total = 0;
    for (const std::uint64_t c : counts)
        total += c;
    const double p = static_cast<double>(total) / static_cast<double>(mc.n_samples);
    return {p, binomial_std_err(p, mc.n_samples), Method::MonteCarlo, 0.0};
}

} // namespace beamout::oracle
