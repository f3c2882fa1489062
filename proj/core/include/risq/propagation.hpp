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

#ifndef RISQ_PROPAGATION_HPP
#define RISQ_PROPAGATION_HPP

#include "risq/geometry.hpp"
#include "risq/system.hpp"

#include <variant>

namespace risq
{
    // G D^-alpha d^-alpha for the LoS cascade; G is not applied to the NLoS cascade.
    struct PowerLaw
    {
        double exponent = 2.0;      // alpha (LoS)
        double nlos_exponent = 2.0; // alpha' (NLoS)
        double antenna_gain = 1.0;  // G, linear
    };

    // Extra cascade gain applied on top of the two segment losses.
    enum class CascadeGain
    {
        none,
        // Each 38.901 segment loss is referenced to 1 m; the cascade counts that reference loss twice.
        // free_space_1m adds one back: (4 pi / lambda)^2.
        free_space_1m,
    };

    // 3GPP TR 38.901 UMa (Table 7.4.1-1), evaluated per segment and multiplied.
    // The BS->RIS segment uses (h_BS = bs_height, h_UT = ris_height), the RIS->user segment
    // (h_BS = ris_height, h_UT = user_height). Only the sub-breakpoint LoS expression is used.
    struct Uma3gpp
    {
        double carrier_freq = 5.9e9; // [Hz]
        double bs_height = 25.0;     // [m]
        double ris_height = 10.0;    // [m]
        double user_height = 1.5;    // [m]
        double antenna_gain = 1.0;   // linear, applied to LoS and NLoS cascades
        CascadeGain cascade_gain = CascadeGain::none;
    };

    using PathLossModel = std::variant<PowerLaw, Uma3gpp>;

    void validate(const PathLossModel &model);

    // Single-segment losses in dB
    double uma_los_loss_db(double distance_3d, double carrier_freq_hz);
    double uma_nlos_loss_db(double distance_3d, double carrier_freq_hz, double ut_height);

    // End-to-end power gain of the BS -> element -> user path; D, d >= kNearFieldGuard
    double los_gain(const PathLossModel &model, double D, double d);
    double nlos_gain(const PathLossModel &model, double D, double d);

    // LoS cascade gain with the element at BS-side distance D on a path of fixed length D + d = total_length
    double gain_vs_placement(const PathLossModel &model, double total_length, double D);

    struct LinkBudget
    {
        double pl_los;   // PL_LoS, linear
        double pl_nlos;  // PL_NLoS, linear
        double eta_los;  // P Gamma^2 / sigma^2 * PL_LoS
        double eta_nlos; // P Gamma^2 / sigma^2 * PL_NLoS
    };

    LinkBudget make_budget(double pl_los, double pl_nlos, const SystemParams &params);

    // Gains evaluated at the panel-center distances and treated as constant over the panel.
    LinkBudget center_budget(const PathLossModel &model, const LinkGeometry &geom, const SystemParams &params);

    // center_budget, after checking the far-field regime
    LinkBudget farfield_budget(const PathLossModel &model, const LinkGeometry &geom, const SystemParams &params,
                               double min_ratio = kDefaultFarFieldRatio);

} // namespace risq

#endif
