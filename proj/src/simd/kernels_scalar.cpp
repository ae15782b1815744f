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

#include <cmath>

namespace beamout::simd::detail
{

namespace
{

void affine_scalar(const double *z1, const double *z2, std::size_t n, const Affine2 &t, double *x, double *y)
{
    for (std::size_t i = 0; i < n; ++i)
    {
        x[i] = t.mx + (t.s11 * z1[i] + t.s12 * z2[i]);
        y[i] = t.my + (t.s12 * z1[i] + t.s22 * z2[i]);
    }
}

// atan2(x, y) is the deviation from +y; at the origin it is 0 (a measure-zero draw).
void received_power_scalar(const double *x, const double *y, std::size_t n, const PowerModel &m, double *out)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = channel::received_power(std::atan2(x[i], y[i]), m.antenna, m.link);
}

std::size_t count_outage_scalar(const double *x, const double *y, std::size_t n, const PowerModel &m)
{
    const double threshold = m.link.gamma_th();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        count += channel::received_power(std::atan2(x[i], y[i]), m.antenna, m.link) <= threshold ? 1 : 0;
    return count;
}

} // namespace

const KernelTable kScalarTable{Isa::Scalar, &affine_scalar, &received_power_scalar, &count_outage_scalar};

} // namespace beamout::simd::detail
