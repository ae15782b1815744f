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

#include "tables.hpp"

#ifdef BEAMOUT_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numbers>

#define BEAMOUT_AVX2 __attribute__((target("avx2")))

namespace beamout::simd::detail
{

namespace
{

// Cephes-style atan on [0, 1]: reduce t > 0.66 through pi/4 + atan((t - 1)/(t + 1)),
// then a (4, 5) rational approximation in t^2. Max error ~1 ulp.
BEAMOUT_AVX2 inline __m256d atan_unit(__m256d t)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d upper = _mm256_cmp_pd(t, _mm256_set1_pd(0.66), _CMP_GT_OQ);
    const __m256d reduced = _mm256_div_pd(_mm256_sub_pd(t, one), _mm256_add_pd(t, one));
    const __m256d u = _mm256_blendv_pd(t, reduced, upper);
    const __m256d base = _mm256_and_pd(upper, _mm256_set1_pd(std::numbers::pi / 4.0));
    const __m256d extra = _mm256_and_pd(upper, _mm256_set1_pd(0.5 * 6.123233995736765886130e-17));

    const __m256d z = _mm256_mul_pd(u, u);
    __m256d p = _mm256_set1_pd(-8.750608600031904122785e-1);
    p = _mm256_add_pd(_mm256_mul_pd(p, z), _mm256_set1_pd(-1.615753718733365076637e1));
    p = _mm256_add_pd(_mm256_mul_pd(p, z), _mm256_set1_pd(-7.500855792314704667340e1));
    p = _mm256_add_pd(_mm256_mul_pd(p, z), _mm256_set1_pd(-1.228866684490136173410e2));
    p = _mm256_add_pd(_mm256_mul_pd(p, z), _mm256_set1_pd(-6.485021904942025371773e1));
    __m256d q = _mm256_add_pd(z, _mm256_set1_pd(2.485846490142306297962e1));
    q = _mm256_add_pd(_mm256_mul_pd(q, z), _mm256_set1_pd(1.650270098316988542046e2));
    q = _mm256_add_pd(_mm256_mul_pd(q, z), _mm256_set1_pd(4.328810604912902668951e2));
    q = _mm256_add_pd(_mm256_mul_pd(q, z), _mm256_set1_pd(4.853903996359136964868e2));
    q = _mm256_add_pd(_mm256_mul_pd(q, z), _mm256_set1_pd(1.945506571482613964425e2));

    const __m256d r = _mm256_div_pd(_mm256_mul_pd(z, p), q);
    const __m256d a = _mm256_add_pd(_mm256_mul_pd(u, r), u);
    return _mm256_add_pd(base, _mm256_add_pd(a, extra));
}

// |atan2(x, y)| in [0, pi]
BEAMOUT_AVX2 inline __m256d abs_deviation(__m256d x, __m256d y)
{
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d ax = _mm256_andnot_pd(sign_mask, x);
    const __m256d ay = _mm256_andnot_pd(sign_mask, y);
    const __m256d hi = _mm256_max_pd(ax, ay);
    const __m256d lo = _mm256_min_pd(ax, ay);
    const __m256d origin = _mm256_cmp_pd(hi, _mm256_setzero_pd(), _CMP_EQ_OQ);
    const __m256d t = _mm256_andnot_pd(origin, _mm256_div_pd(lo, _mm256_blendv_pd(hi, _mm256_set1_pd(1.0), origin)));

    const __m256d pio2_hi = _mm256_set1_pd(1.5707963267948966);
    const __m256d pio2_lo = _mm256_set1_pd(6.123233995736766e-17);
    __m256d a = atan_unit(t);
    const __m256d steep = _mm256_cmp_pd(ax, ay, _CMP_GT_OQ);
    a = _mm256_blendv_pd(a, _mm256_add_pd(_mm256_sub_pd(pio2_hi, a), pio2_lo), steep);
    const __m256d behind = _mm256_cmp_pd(y, _mm256_setzero_pd(), _CMP_LT_OQ);
    const __m256d flipped = _mm256_add_pd(_mm256_sub_pd(_mm256_set1_pd(std::numbers::pi), a),
                                          _mm256_set1_pd(1.2246467991473532e-16));
    return _mm256_blendv_pd(a, flipped, behind);
}

// exp(v) for v <= 0; returns 0 below -708.
BEAMOUT_AVX2 inline __m256d exp_nonpositive(__m256d v)
{
    const __m256d floor_arg = _mm256_set1_pd(-708.0);
    const __m256d underflow = _mm256_cmp_pd(v, floor_arg, _CMP_LT_OQ);
    const __m256d x0 = _mm256_max_pd(v, floor_arg);

    const __m256d n = _mm256_floor_pd(_mm256_add_pd(_mm256_mul_pd(x0, _mm256_set1_pd(1.4426950408889634073599)),
                                                    _mm256_set1_pd(0.5)));
    __m256d x = _mm256_sub_pd(x0, _mm256_mul_pd(n, _mm256_set1_pd(6.93145751953125e-1)));
    x = _mm256_sub_pd(x, _mm256_mul_pd(n, _mm256_set1_pd(1.42860682030941723212e-6)));

    const __m256d xx = _mm256_mul_pd(x, x);
    __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
    p = _mm256_add_pd(_mm256_mul_pd(p, xx), _mm256_set1_pd(3.02994407707441961300e-2));
    p = _mm256_add_pd(_mm256_mul_pd(p, xx), _mm256_set1_pd(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, x);
    __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
    q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.52448340349684104192e-3));
    q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.27265548208155028766e-1));
    q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.00000000000000000009e0));
    const __m256d frac = _mm256_add_pd(_mm256_set1_pd(1.0),
                                       _mm256_mul_pd(_mm256_set1_pd(2.0), _mm256_div_pd(p, _mm256_sub_pd(q, p))));

    // 2^n: the magic constant places n + 1023 in the low mantissa bits, the shift moves it to the exponent field
    const __m256d biased = _mm256_add_pd(n, _mm256_set1_pd(1023.0 + 6755399441055744.0));
    const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_castpd_si256(biased), 52));
    return _mm256_andnot_pd(underflow, _mm256_mul_pd(frac, scale));
}

struct PowerParams
{
    double neg_rate;  // -1.2 ln(10) / theta_3db^2
    double a_m;
    double p_max;
    double friis;
    double gamma_th;
};

PowerParams power_params(const PowerModel &m)
{
    const double theta = m.antenna.theta_3db();
    return {-channel::kPatternExponent * std::numbers::ln10 / (theta * theta), m.antenna.a_m(), m.antenna.p_max(),
            channel::friis_gain(m.link), m.link.gamma_th()};
}

BEAMOUT_AVX2 inline __m256d power4(__m256d x, __m256d y, const PowerParams &pp)
{
    const __m256d theta = abs_deviation(x, y);
    const __m256d gain = exp_nonpositive(_mm256_mul_pd(_mm256_set1_pd(pp.neg_rate), _mm256_mul_pd(theta, theta)));
    const __m256d floored = _mm256_max_pd(gain, _mm256_set1_pd(pp.a_m));
    return _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(pp.p_max), floored), _mm256_set1_pd(pp.friis));
}

BEAMOUT_AVX2 void affine_avx2_core(const double *z1, const double *z2, std::size_t n, const Affine2 &t, double *x,
                                   double *y)
{
    const __m256d s11 = _mm256_set1_pd(t.s11);
    const __m256d s12 = _mm256_set1_pd(t.s12);
    const __m256d s22 = _mm256_set1_pd(t.s22);
    const __m256d mx = _mm256_set1_pd(t.mx);
    const __m256d my = _mm256_set1_pd(t.my);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d a = _mm256_loadu_pd(z1 + i);
        const __m256d b = _mm256_loadu_pd(z2 + i);
        _mm256_storeu_pd(x + i, _mm256_add_pd(mx, _mm256_add_pd(_mm256_mul_pd(s11, a), _mm256_mul_pd(s12, b))));
        _mm256_storeu_pd(y + i, _mm256_add_pd(my, _mm256_add_pd(_mm256_mul_pd(s12, a), _mm256_mul_pd(s22, b))));
    }
    for (; i < n; ++i)
    {
        x[i] = t.mx + (t.s11 * z1[i] + t.s12 * z2[i]);
        y[i] = t.my + (t.s12 * z1[i] + t.s22 * z2[i]);
    }
}

BEAMOUT_AVX2 void received_power_avx2_core(const double *x, const double *y, std::size_t n, const PowerParams &pp,
                                           double *out)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, power4(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), pp));
    if (i < n)
    {
        alignas(32) double xs[4] = {0.0, 0.0, 0.0, 0.0};
        alignas(32) double ys[4] = {1.0, 1.0, 1.0, 1.0};
        alignas(32) double ps[4];
        const std::size_t rest = n - i;
        for (std::size_t j = 0; j < rest; ++j)
        {
            xs[j] = x[i + j];
            ys[j] = y[i + j];
        }
        _mm256_store_pd(ps, power4(_mm256_load_pd(xs), _mm256_load_pd(ys), pp));
        for (std::size_t j = 0; j < rest; ++j)
            out[i + j] = ps[j];
    }
}

BEAMOUT_AVX2 std::size_t count_outage_avx2_core(const double *x, const double *y, std::size_t n,
                                                const PowerParams &pp)
{
    const __m256d threshold = _mm256_set1_pd(pp.gamma_th);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d p = power4(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), pp);
        const int bits = _mm256_movemask_pd(_mm256_cmp_pd(p, threshold, _CMP_LE_OQ));
        count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
    }
    if (i < n)
    {
        alignas(32) double xs[4] = {0.0, 0.0, 0.0, 0.0};
        alignas(32) double ys[4] = {1.0, 1.0, 1.0, 1.0};
        const std::size_t rest = n - i;
        for (std::size_t j = 0; j < rest; ++j)
        {
            xs[j] = x[i + j];
            ys[j] = y[i + j];
        }
        const __m256d p = power4(_mm256_load_pd(xs), _mm256_load_pd(ys), pp);
        const unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(p, threshold, _CMP_LE_OQ)));
        count += static_cast<std::size_t>(std::popcount(bits & ((1u << rest) - 1u)));
    }
    return count;
}

void affine_avx2(const double *z1, const double *z2, std::size_t n, const Affine2 &t, double *x, double *y)
{
    affine_avx2_core(z1, z2, n, t, x, y);
}

void received_power_avx2(const double *x, const double *y, std::size_t n, const PowerModel &m, double *out)
{
    received_power_avx2_core(x, y, n, power_params(m), out);
}

std::size_t count_outage_avx2(const double *x, const double *y, std::size_t n, const PowerModel &m)
{
    return count_outage_avx2_core(x, y, n, power_params(m));
}

} // namespace

const KernelTable kAvx2Table{Isa::Avx2, &affine_avx2, &received_power_avx2, &count_outage_avx2};

} // namespace beamout::simd::detail

#endif
