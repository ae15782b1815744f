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

#ifndef BEAMOUT_QUADRATURE_HPP
#define BEAMOUT_QUADRATURE_HPP

// Globally adaptive 15-point Gauss-Kronrod integration on a finite interval,
// with the QUADPACK (QK15/QAG) error estimate.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace beamout::quadrature
{

struct Options
{
    double abs_tol = 0.0;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

struct Result
{
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
    bool converged = false;
};

struct Segment
{
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

namespace detail
{
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes kKronrodNodes[1], [3], [5] and the center.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
} // namespace detail

template <class F>
Segment gauss_kronrod15(F &&f, double a, double b)
{
    using namespace detail;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::fabs(half);

    std::array<double, 7> f_lo{};
    std::array<double, 7> f_hi{};

    const double fc = f(center);
    double res_gauss = fc * kGaussWeights[3];
    double res_kronrod = fc * kKronrodWeights[7];
    double res_abs = std::fabs(res_kronrod);

    for (int j = 0; j < 7; ++j)
    {
        const double dx = half * kKronrodNodes[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        f_lo[j] = f1;
        f_hi[j] = f2;
        res_kronrod += kKronrodWeights[j] * (f1 + f2);
        res_abs += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1)
            res_gauss += kGaussWeights[j / 2] * (f1 + f2);
    }

    const double mean = 0.5 * res_kronrod;
    double res_asc = kKronrodWeights[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        res_asc += kKronrodWeights[j] * (std::fabs(f_lo[j] - mean) + std::fabs(f_hi[j] - mean));

    Segment s{a, b, res_kronrod * half, std::fabs((res_kronrod - res_gauss) * half)};
    res_abs *= abs_half;
    res_asc *= abs_half;
    if (res_asc != 0.0 && s.error != 0.0)
        s.error = res_asc * std::min(1.0, std::pow(200.0 * s.error / res_asc, 1.5));
    if (res_abs > tiny / (50.0 * eps))
        s.error = std::max(50.0 * eps * res_abs, s.error);
    return s;
}

// Bisects the segment with the largest error estimate until
// error <= max(abs_tol, rel_tol * |value|) or max_intervals is reached.
template <class F>
Result integrate(F &&f, double a, double b, const Options &opt = {})
{
    if (a == b)
        return {0.0, 0.0, 1, true};

    auto worse = [](const Segment &l, const Segment &r) { return l.error < r.error; };
    std::priority_queue<Segment, std::vector<Segment>, decltype(worse)> heap(worse);

    Segment first = gauss_kronrod15(f, a, b);
    double value = first.value;
    double error = first.error;
    heap.push(first);
    int intervals = 1;

    auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::fabs(value)); };

    while (error > target() && intervals < opt.max_intervals)
    {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b)))
            break; // interval exhausted at machine resolution
        heap.pop();
        const Segment left = gauss_kronrod15(f, worst.a, mid);
        const Segment right = gauss_kronrod15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }

    // resum to drop the running-sum drift
    value = 0.0;
    error = 0.0;
    while (!heap.empty())
    {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {value, error, intervals, error <= target()};
}

} // namespace beamout::quadrature

#endif
