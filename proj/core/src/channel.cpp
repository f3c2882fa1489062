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

#include "risq/channel.hpp"

#include <fmt/format.h>

#include <cmath>

namespace risq
{
    RealMatrix los_phases(const DistanceField &field, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw InvalidArgument(fmt::format("los_phases: wavelength must be positive (got {})", wavelength));
        // fmod is exact, so the only rounding is in the final scaling
        return field.total.unaryExpr([wavelength](double L)
                                     { return wrap_phase(kTwoPi * (std::fmod(L, wavelength) / wavelength)); });
    }

    ChannelRealization sample_channel(const SystemParams &params, const LinkBudget &budget,
                                      const RealMatrix &los_phase, RandomStream &rng)
    {
        const auto &kappa = params.kappa();
        const double los_amp = std::sqrt(kappa.los_weight() * budget.pl_los);
        const double nlos_amp = std::sqrt(kappa.nlos_weight() * budget.pl_nlos);

        ChannelRealization out{ComplexMatrix(los_phase.rows(), los_phase.cols()), los_phase};
        for (Eigen::Index i = 0; i < los_phase.size(); ++i)
        {
            std::complex<double> h = std::polar(los_amp, -los_phase.data()[i]);
            if (!kappa.is_pure_los())
                h += nlos_amp * rng.complex_normal();
            out.h_tilde.data()[i] = h;
        }
        return out;
    }

    double received_snr(const SystemParams &params, const ChannelRealization &realization, const PhaseMatrix &theta)
    {
        const auto &h = realization.h_tilde;
        if (h.rows() != theta.rows() || h.cols() != theta.cols())
            throw InvalidArgument(fmt::format("received_snr: channel is {} x {} but phases are {} x {}",
                                              h.rows(), h.cols(), theta.rows(), theta.cols()));
        std::complex<double> sum{0.0, 0.0};
        for (Eigen::Index i = 0; i < h.size(); ++i)
            sum += std::polar(1.0, -theta.values().data()[i]) * h.data()[i];
        return params.snr_scale() * std::norm(sum);
    }

} // namespace risq
