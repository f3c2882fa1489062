// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The risq Authors
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

#ifndef RISQ_CHANNEL_HPP
#define RISQ_CHANNEL_HPP

#include "risq/geometry.hpp"
#include "risq/phase.hpp"
#include "risq/propagation.hpp"
#include "risq/rng.hpp"
#include "risq/system.hpp"

namespace risq
{
    // phi_{m,n} = (2 pi / lambda) L_{m,n} mod 2 pi
    RealMatrix los_phases(const DistanceField &field, double wavelength);

    struct ChannelRealization
    {
        ComplexMatrix h_tilde; // composite Rician coefficient per element
        RealMatrix los_phase;  // phi_{m,n}
    };

    // h~ = sqrt(kappa/(kappa+1)) sqrt(PL_LoS) e^{-j phi} + sqrt(1/(kappa+1)) sqrt(PL_NLoS) g,  g ~ CN(0, 1).
    // Draws one g per element in row-major order; a pure-LoS channel consumes no randomness.
    ChannelRealization sample_channel(const SystemParams &params, const LinkBudget &budget,
                                      const RealMatrix &los_phase, RandomStream &rng);

    // gamma = (P / sigma^2) |sum Gamma e^{-j theta} h~|^2
    double received_snr(const SystemParams &params, const ChannelRealization &realization, const PhaseMatrix &theta);

} // namespace risq

#endif
