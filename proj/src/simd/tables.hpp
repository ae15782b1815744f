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

#ifndef BEAMOUT_SIMD_TABLES_HPP
#define BEAMOUT_SIMD_TABLES_HPP

#include "beamout/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BEAMOUT_HAVE_AVX2_KERNELS 1
#endif

namespace beamout::simd::detail
{

extern const KernelTable kScalarTable;
#ifdef BEAMOUT_HAVE_AVX2_KERNELS
extern const KernelTable kAvx2Table;
#endif

} // namespace beamout::simd::detail

#endif
