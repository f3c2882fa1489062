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

#ifndef RISQ_SYSTEM_HPP
#define RISQ_SYSTEM_HPP

#include "risq/common.hpp"

#include <cstddef>
#include <limits>

namespace risq
{
    // Rician factor kappa in [0, inf]; infinity is the pure line-of-sight channel.
    class RicianFactor
    {
    public:
        explicit RicianFactor(double kappa);
        static RicianFactor pure_los() { return RicianFactor(std::numeric_limits<double>::infinity()); }

        double value() const { return kappa_; }
        bool is_pure_los() const { return std::isinf(kappa_); }

        double los_weight() const;  // kappa / (kappa + 1), 1 for pure LoS
        double nlos_weight() const; // 1 / (kappa + 1), 0 for pure LoS

        friend bool operator==(const RicianFactor &, const RicianFactor &) = default;

    private:
        double kappa_;
    };

    // Radio-link constants, linear units internally (power in mW).
    class SystemParams
    {
    public:
        SystemParams(double transmit_power_mw, double noise_power_mw, double carrier_freq_hz,
                     double reflection_amplitude, RicianFactor kappa, std::size_t rows, std::size_t cols);

        static SystemParams from_dbm(double transmit_power_dbm, double noise_power_dbm, double carrier_freq_hz,
                                     double reflection_amplitude, RicianFactor kappa,
                                     std::size_t rows, std::size_t cols);

        double transmit_power() const { return power_; } // P [mW]
        double noise_power() const { return noise_; }    // sigma^2 [mW]
        double carrier_freq() const { return freq_; }    // f [Hz]
        double wavelength() const { return kSpeedOfLight / freq_; }
        double reflection_amplitude() const { return gamma_; }
        const RicianFactor &kappa() const { return kappa_; }
        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        std::size_t element_count() const { return rows_ * cols_; }

        // P Gamma^2 / sigma^2
        double snr_scale() const { return power_ * gamma_ * gamma_ / noise_; }

        SystemParams with_kappa(RicianFactor kappa) const;
        SystemParams with_panel(std::size_t rows, std::size_t cols) const;
        SystemParams with_transmit_power(double transmit_power_mw) const;
        SystemParams with_reflection_amplitude(double reflection_amplitude) const;

    private:
        double power_;
        double noise_;
        double freq_;
        double gamma_;
        RicianFactor kappa_;
        std::size_t rows_;
        std::size_t cols_;
    };

} // namespace risq

#endif
