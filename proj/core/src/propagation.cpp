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

#include "risq/propagation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace risq
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        void check_distances(double D, double d)
        {
            if (!(D >= kNearFieldGuard) || !(d >= kNearFieldGuard))
                throw PreconditionError(fmt::format(
                    "path loss: distances must be at least {} m (got D = {} m, d = {} m)", kNearFieldGuard, D, d));
        }

        double cascade_gain(const Uma3gpp &uma)
        {
            double gain = uma.antenna_gain;
            if (uma.cascade_gain == CascadeGain::free_space_1m)
            {
                const double k = kTwoPi * 2.0 * uma.carrier_freq / kSpeedOfLight; // 4 pi / lambda
                gain *= k * k;
            }
            return gain;
        }
    } // namespace

    void validate(const PathLossModel &model)
    {
        std::visit(overloaded{
                       [](const PowerLaw &p)
                       {
                           if (!(p.exponent > 0.0) || !(p.nlos_exponent > 0.0))
                               throw InvalidArgument(fmt::format(
                                   "power-law exponents must be positive (alpha = {}, alpha' = {})", p.exponent, p.nlos_exponent));
                           if (!(p.antenna_gain > 0.0) || !std::isfinite(p.antenna_gain))
                               throw InvalidArgument(fmt::format("antenna gain must be positive (got {})", p.antenna_gain));
                       },
                       [](const Uma3gpp &u)
                       {
                           if (!(u.carrier_freq > 0.0))
                               throw InvalidArgument(fmt::format("UMa carrier frequency must be positive (got {})", u.carrier_freq));
                           if (!(u.bs_height > 0.0) || !(u.ris_height > 0.0) || !(u.user_height > 0.0))
                               throw InvalidArgument("UMa heights must be positive");
                           if (!(u.antenna_gain > 0.0) || !std::isfinite(u.antenna_gain))
                               throw InvalidArgument(fmt::format("antenna gain must be positive (got {})", u.antenna_gain));
                       },
                   },
                   model);
    }

    double uma_los_loss_db(double distance_3d, double carrier_freq_hz)
    {
        return 28.0 + 22.0 * std::log10(distance_3d) + 20.0 * std::log10(carrier_freq_hz / 1e9);
    }

    double uma_nlos_loss_db(double distance_3d, double carrier_freq_hz, double ut_height)
    {
        const double nlos = 13.54 + 39.08 * std::log10(distance_3d) + 20.0 * std::log10(carrier_freq_hz / 1e9) -
                            0.6 * (ut_height - 1.5);
        return std::max(uma_los_loss_db(distance_3d, carrier_freq_hz), nlos);
    }

    double los_gain(const PathLossModel &model, double D, double d)
    {
        check_distances(D, d);
        return std::visit(overloaded{
                              [&](const PowerLaw &p)
                              { return p.antenna_gain * std::pow(D, -p.exponent) * std::pow(d, -p.exponent); },
                              [&](const Uma3gpp &u)
                              {
                                  const double loss_db = uma_los_loss_db(D, u.carrier_freq) + uma_los_loss_db(d, u.carrier_freq);
                                  return cascade_gain(u) * db_to_linear(-loss_db);
                              },
                          },
                          model);
    }

    double nlos_gain(const PathLossModel &model, double D, double d)
    {
        check_distances(D, d);
        return std::visit(overloaded{
                              [&](const PowerLaw &p)
                              { return std::pow(D, -p.nlos_exponent) * std::pow(d, -p.nlos_exponent); },
                              [&](const Uma3gpp &u)
                              {
                                  const double loss_db = uma_nlos_loss_db(D, u.carrier_freq, u.ris_height) +
                                                         uma_nlos_loss_db(d, u.carrier_freq, u.user_height);
                                  return cascade_gain(u) * db_to_linear(-loss_db);
                              },
                          },
                          model);
    }

    double gain_vs_placement(const PathLossModel &model, double total_length, double D)
    {
        if (!(D >= kNearFieldGuard && D <= total_length - kNearFieldGuard))
            throw PreconditionError(fmt::format(
                "gain_vs_placement: split D = {} m outside [{}, {}]", D, kNearFieldGuard, total_length - kNearFieldGuard));
        if (const auto *p = std::get_if<PowerLaw>(&model))
        {
            // (L - D) D = L^2/4 - (D - L/2)^2
            const double half = 0.5 * total_length;
            const double product = half * half - (D - half) * (D - half);
            return p->antenna_gain * std::pow(product, -p->exponent);
        }
        return los_gain(model, D, total_length - D);
    }

    LinkBudget make_budget(double pl_los, double pl_nlos, const SystemParams &params)
    {
        if (!(pl_los > 0.0) || !(pl_nlos > 0.0))
            throw InvalidArgument(fmt::format("link budget gains must be positive (PL_LoS = {}, PL_NLoS = {})", pl_los, pl_nlos));
        const double scale = params.snr_scale();
        return {pl_los, pl_nlos, scale * pl_los, scale * pl_nlos};
    }

    LinkBudget center_budget(const PathLossModel &model, const LinkGeometry &geom, const SystemParams &params)
    {
        const double D = center_bs_distance(geom);
        const double d = center_user_distance(geom);
        return make_budget(los_gain(model, D, d), nlos_gain(model, D, d), params);
    }

    LinkBudget farfield_budget(const PathLossModel &model, const LinkGeometry &geom, const SystemParams &params,
                               double min_ratio)
    {
        require_far_field(geom, min_ratio);
        return center_budget(model, geom, params);
    }

} // namespace risq
