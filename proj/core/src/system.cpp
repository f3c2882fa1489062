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

#include "risq/system.hpp"

#include <fmt/format.h>

namespace risq
{
    RicianFactor::RicianFactor(double kappa) : kappa_(kappa)
    {
        if (std::isnan(kappa_) || kappa_ < 0.0)
            throw InvalidArgument(fmt::format("Rician factor must lie in [0, inf] (got {})", kappa_));
    }

    double RicianFactor::los_weight() const
    {
        return is_pure_los() ? 1.0 : kappa_ / (kappa_ + 1.0);
    }

    double RicianFactor::nlos_weight() const
    {
        return is_pure_los() ? 0.0 : 1.0 / (kappa_ + 1.0);
    }

    SystemParams::SystemParams(double transmit_power_mw, double noise_power_mw, double carrier_freq_hz,
                               double reflection_amplitude, RicianFactor kappa, std::size_t rows, std::size_t cols)
        : power_(transmit_power_mw), noise_(noise_power_mw), freq_(carrier_freq_hz),
          gamma_(reflection_amplitude), kappa_(kappa), rows_(rows), cols_(cols)
    {
        if (!(power_ > 0.0) || !std::isfinite(power_))
            throw InvalidArgument(fmt::format("transmit power must be positive and finite (got {} mW)", power_));
        if (!(noise_ > 0.0) || !std::isfinite(noise_))
            throw InvalidArgument(fmt::format("noise power must be positive and finite (got {} mW)", noise_));
        if (!(freq_ > 0.0) || !std::isfinite(freq_))
            throw InvalidArgument(fmt::format("carrier frequency must be positive and finite (got {} Hz)", freq_));
        if (!(gamma_ > 0.0 && gamma_ <= 1.0))
            throw InvalidArgument(fmt::format("reflection amplitude must lie in (0, 1] (got {})", gamma_));
        if (rows_ < 1 || cols_ < 1)
            throw InvalidArgument(fmt::format("panel must have at least one row and column (got {} x {})", rows_, cols_));
    }

    SystemParams SystemParams::from_dbm(double transmit_power_dbm, double noise_power_dbm, double carrier_freq_hz,
                                        double reflection_amplitude, RicianFactor kappa,
                                        std::size_t rows, std::size_t cols)
    {
        return {db_to_linear(transmit_power_dbm), db_to_linear(noise_power_dbm), carrier_freq_hz,
                reflection_amplitude, kappa, rows, cols};
    }

    SystemParams SystemParams::with_kappa(RicianFactor kappa) const
    {
        auto out = *this;
        out.kappa_ = kappa;
        return out;
    }

    SystemParams SystemParams::with_panel(std::size_t rows, std::size_t cols) const
    {
        return {power_, noise_, freq_, gamma_, kappa_, rows, cols};
    }

    SystemParams SystemParams::with_transmit_power(double transmit_power_mw) const
    {
        return {transmit_power_mw, noise_, freq_, gamma_, kappa_, rows_, cols_};
    }

    SystemParams SystemParams::with_reflection_amplitude(double reflection_amplitude) const
    {
        return {power_, noise_, freq_, reflection_amplitude, kappa_, rows_, cols_};
    }

} // namespace risq
