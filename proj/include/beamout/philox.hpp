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

#ifndef BEAMOUT_PHILOX_HPP
#define BEAMOUT_PHILOX_HPP

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A draw is a pure
// function of (key, counter), so any block of the stream can be generated
// independently of the others.

#include <array>
#include <cstdint>

namespace beamout
{

class Philox4x32
{
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    // Two 53-bit uniforms in the open interval (0, 1) for stream position `index`.
    static constexpr std::array<double, 2> uniform_pair(std::uint64_t seed, std::uint64_t index) noexcept
    {
        const Counter out = generate({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0u, 0u},
                                     {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
        const std::uint64_t u0 = (std::uint64_t{out[0]} << 32) | out[1];
        const std::uint64_t u1 = (std::uint64_t{out[2]} << 32) | out[3];
        return {to_open_unit(u0), to_open_unit(u1)};
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr double to_open_unit(std::uint64_t bits) noexcept
    {
        constexpr double two_m53 = 1.0 / 9007199254740992.0;
        return (static_cast<double>(bits >> 11) + 0.5) * two_m53;
    }
};

} // namespace beamout

#endif
