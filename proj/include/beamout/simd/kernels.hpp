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

#ifndef BEAMOUT_SIMD_KERNELS_HPP
#define BEAMOUT_SIMD_KERNELS_HPP

// Batch kernels of the Monte Carlo pipeline: the correlated-Gaussian affine map
// p = mean + S z and the physical received-power evaluation of each estimate.
//
// Every kernel has a scalar reference built on the channel module and an AVX2
// variant; the variant is chosen once at runtime (override with the environment
// variable BEAMOUT_SIMD=scalar|avx2). Variants agree bit-for-bit on the affine map
// and to ~1e-13 relative on received power.

#include "beamout/channel.hpp"

#include <cstddef>
#include <span>

namespace beamout::simd
{

enum class Isa
{
    Scalar,
    Avx2
};

const char *to_string(Isa isa) noexcept;

// x = mx + s11 z1 + s12 z2, y = my + s12 z1 + s22 z2
struct Affine2
{
    double s11 = 1.0;
    double s12 = 0.0;
    double s22 = 1.0;
    double mx = 0.0;
    double my = 0.0;
};

struct PowerModel
{
    channel::AntennaConfig antenna;
    channel::LinkConfig link;
};

namespace detail
{
struct KernelTable
{
    Isa isa;
    void (*affine)(const double *z1, const double *z2, std::size_t n, const Affine2 &t, double *x, double *y);
    void (*received_power)(const double *x, const double *y, std::size_t n, const PowerModel &m, double *out);
    std::size_t (*count_outage)(const double *x, const double *y, std::size_t n, const PowerModel &m);
};
} // namespace detail

class Kernels
{
public:
    explicit Kernels(const detail::KernelTable &table) noexcept : table_(&table) {}

    Isa isa() const noexcept { return table_->isa; }

    void affine(std::span<const double> z1, std::span<const double> z2, const Affine2 &t, std::span<double> x,
                std::span<double> y) const;

    // P_r = P_max G(theta) G_d with theta the deviation of (x, y) from +y
    void received_power(std::span<const double> x, std::span<const double> y, const PowerModel &m,
                        std::span<double> out) const;

    // Number of points with P_r <= gamma_th
    std::size_t count_outage(std::span<const double> x, std::span<const double> y, const PowerModel &m) const;

private:
    const detail::KernelTable *table_;
};

bool isa_supported(Isa isa) noexcept;

// Throws Error(invalid_argument) when the ISA is not available on this build or CPU.
Kernels kernels(Isa isa);

// Best supported ISA, honoring BEAMOUT_SIMD.
Kernels active_kernels();

} // namespace beamout::simd

#endif
