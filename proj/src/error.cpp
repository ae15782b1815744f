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

#include "beamout/error.hpp"

namespace beamout
{

const char *to_string(Errc code) noexcept
{
    switch (code)
    {
    case Errc::invalid_model: return "invalid-model";
    case Errc::not_positive_definite: return "not-positive-definite";
    case Errc::degenerate_normal: return "degenerate-normal";
    case Errc::undefined_direction: return "undefined-direction";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::wrong_regime: return "wrong-regime";
    case Errc::beam_wraparound: return "beam-wraparound";
    case Errc::tolerance_not_met: return "tolerance-not-met";
    case Errc::config: return "config";
    }
    return "unknown";
}

} // namespace beamout
