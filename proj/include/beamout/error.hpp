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

#ifndef BEAMOUT_ERROR_HPP
#define BEAMOUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace beamout
{

enum class Errc
{
    invalid_model,         // positioning-error model violates sigma1 >= sigma2 > 0
    not_positive_definite, // covariance is not symmetric positive definite
    degenerate_normal,     // half-plane normal vector is zero
    undefined_direction,   // pointing angle requested for the origin
    invalid_argument,      // any other out-of-domain input
    wrong_regime,          // k-factor requested outside the probabilistic regime
    beam_wraparound,       // k-factor tan argument at or beyond pi/2
    tolerance_not_met,     // adaptive quadrature error estimate exceeds the requested tolerance
    config                 // CLI configuration error
};

const char *to_string(Errc code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace beamout

#endif
