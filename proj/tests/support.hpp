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

#ifndef RISQ_TESTS_SUPPORT_HPP
#define RISQ_TESTS_SUPPORT_HPP

#include "risq/config.hpp"
#include "risq/propagation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace risq::testing
{
    // Reference urban-macro layout with the re-referenced cascade
    inline RunConfig reference_config(std::size_t rows = 1, std::size_t cols = 1)
    {
        RunConfig c;
        c.rician_kappa = 4.0;
        c.rows = rows;
        c.cols = cols;
        c.cascade_gain = CascadeGain::free_space_1m;
        return c;
    }

    inline LinkBudget reference_budget(const RunConfig &c)
    {
        return center_budget(path_loss_model(c), make_geometry(layout_spec(c)), system_params(c));
    }

    inline std::string source_path(const std::string &relative)
    {
        return std::string(RISQ_SOURCE_DIR) + "/" + relative;
    }

    // Circular distance between two angles
    inline double angle_gap(double a, double b)
    {
        const double r = std::remainder(a - b, 2.0 * std::numbers::pi);
        return std::abs(r);
    }

    // Rate-ratio bound written out directly: a = kappa eta_LoS / (kappa + 1), b = eta_NLoS / (kappa + 1)
    inline long double bound_ratio(long double a, long double b, long double x, int bits)
    {
        const long double c = std::cos(std::numbers::pi_v<long double> / std::pow(2.0L, bits));
        return std::log1p(b * x + a * x * x * c * c) / std::log1p(b * x + a * x * x);
    }

    // Smallest K in [1, 64] whose bound meets the threshold, 0 if none does
    inline int exhaustive_bits(long double a, long double b, long double x, long double threshold)
    {
        for (int k = 1; k <= 64; ++k)
            if (bound_ratio(a, b, x, k) >= threshold)
                return k;
        return 0;
    }

    struct RandomLink
    {
        LinkBudget budget;
        double kappa;
        double elements;
        double threshold;
        long double a() const { return kappa * (long double)budget.eta_los / (kappa + 1.0L); }
        long double b() const { return (long double)budget.eta_nlos / (kappa + 1.0L); }
    };

    // Draw until the threshold is reachable with finitely many bits (f < 1)
    inline RandomLink random_feasible_link(std::mt19937_64 &gen)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (;;)
        {
            RandomLink link;
            const double eta_los = std::pow(10.0, -4.0 + 5.0 * u(gen));
            const double eta_nlos = std::pow(10.0, -4.0 + 5.0 * u(gen));
            link.budget = LinkBudget{eta_los, eta_nlos, eta_los, eta_nlos};
            link.kappa = std::pow(10.0, -1.0 + 3.0 * u(gen));
            const double side = std::floor(1.0 + 100.0 * u(gen));
            link.elements = side * side;
            link.threshold = 0.5 + 0.49 * u(gen);
            const long double x = link.elements;
            const long double f = (std::pow(1.0L + link.b() * x + link.a() * x * x, (long double)link.threshold) - 1.0L -
                                   link.b() * x) / (link.a() * x * x);
            if (f > 0.0L && f < 1.0L - 1e-6L)
                return link;
        }
    }

    // Random link in the Rician regime of the reference system: re-referenced UMa at random placement and
    // transmit power, kappa log-uniform in [1, 16], threshold in [0.5, 0.99]
    inline RandomLink reference_regime_link(std::mt19937_64 &gen)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        RunConfig c = reference_config();
        c.bs_ris_distance_m = 20.0 + 280.0 * u(gen);
        c.ris_user_distance_m = 20.0 + 280.0 * u(gen);
        c.transmit_power_dbm = 30.0 * u(gen);
        RandomLink link;
        link.budget = reference_budget(c);
        link.kappa = std::exp(std::log(16.0) * u(gen));
        link.elements = 1.0;
        link.threshold = 0.5 + 0.49 * u(gen);
        return link;
    }

} // namespace risq::testing

#endif
