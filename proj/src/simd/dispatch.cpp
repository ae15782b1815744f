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

#include "beamout/error.hpp"

#include <cstdlib>
#include <string_view>

namespace beamout::simd
{

const char *to_string(Isa isa) noexcept
{
    switch (isa)
    {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

void Kernels::affine(std::span<const double> z1, std::span<const double> z2, const Affine2 &t, std::span<double> x,
                     std::span<double> y) const
{
    const std::size_t n = z1.size();
    if (z2.size() != n || x.size() < n || y.size() < n)
        throw Error(Errc::invalid_argument, "affine kernel: mismatched span sizes");
    table_->affine(z1.data(), z2.data(), n, t, x.data(), y.data());
}

void Kernels::received_power(std::span<const double> x, std::span<const double> y, const PowerModel &m,
                             std::span<double> out) const
{
    if (y.size() != x.size() || out.size() < x.size())
        throw Error(Errc::invalid_argument, "received-power kernel: mismatched span sizes");
    table_->received_power(x.data(), y.data(), x.size(), m, out.data());
}

std::size_t Kernels::count_outage(std::span<const double> x, std::span<const double> y, const PowerModel &m) const
{
    if (y.size() != x.size())
        throw Error(Errc::invalid_argument, "outage-count kernel: mismatched span sizes");
    return table_->count_outage(x.data(), y.data(), x.size(), m);
}

bool isa_supported(Isa isa) noexcept
{
    switch (isa)
    {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#ifdef BEAMOUT_HAVE_AVX2_KERNELS
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Kernels kernels(Isa isa)
{
    if (!isa_supported(isa))
        throw Error(Errc::invalid_argument, std::string("SIMD variant not supported here: ") + to_string(isa));
#ifdef BEAMOUT_HAVE_AVX2_KERNELS
    if (isa == Isa::Avx2)
        return Kernels(detail::kAvx2Table);
#endif
    return Kernels(detail::kScalarTable);
}

Kernels active_kernels()
{
    static const Isa chosen = [] {
        const char *env = std::getenv("BEAMOUT_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar")
            return Isa::Scalar;
        return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return kernels(chosen);
}

} // namespace beamout::simd
