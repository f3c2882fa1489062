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

#include "risq/experiments.hpp"

#include "risq/analysis.hpp"
#include "risq/channel.hpp"
#include "risq/montecarlo.hpp"

#include <fmt/format.h>

#include <cmath>

namespace risq
{
    namespace
    {
        // Square panel side as an element count; non-integral sides are analytic-only
        bool integral_side(double n)
        {
            return n == std::floor(n) && n <= 1e9;
        }

        bool simulated(const RunConfig &c, double side)
        {
            return integral_side(side) && side * side <= c.simulation_element_limit;
        }

        LinkGeometry square_geometry(const RunConfig &c, std::size_t side)
        {
            auto layout = layout_spec(c);
            layout.rows = side;
            layout.cols = side;
            return make_geometry(layout);
        }

        EngineOptions engine(const RunConfig &c)
        {
            return {c.threads};
        }

        // Quantization-error matrices for each K from the optimal phases of the given geometry
        std::vector<RealMatrix> phase_errors(const LinkGeometry &geom, const SystemParams &params, double common_phase,
                                             const std::vector<int> &bits)
        {
            const auto phi = los_phases(exact_distances(geom), params.wavelength());
            const auto theta_star = optimal_phases(phi, common_phase);
            std::vector<RealMatrix> out;
            for (int k : bits)
                out.push_back(quantize(theta_star, QuantizerSpec(k)).delta);
            return out;
        }

        Cell optional_cell(const std::optional<double> &v)
        {
            if (v)
                return *v;
            return std::monostate{};
        }

        std::string heights_note(const RunConfig &c)
        {
            return fmt::format("BS/RIS/user heights held at {}/{}/{} m; horizontal distances vary",
                               c.bs_height_m, c.ris_height_m, c.user_height_m);
        }
    } // namespace

    const std::vector<Column> &rate_size_columns()
    {
        static const std::vector<Column> cols = {{"N", CellKind::integer},
                                                 {"kappa", CellKind::real},
                                                 {"rate_analytic", CellKind::real},
                                                 {"rate_sim", CellKind::real},
                                                 {"ci95", CellKind::real}};
        return cols;
    }

    const std::vector<Column> &degradation_bits_columns()
    {
        static const std::vector<Column> cols = {{"K", CellKind::integer},
                                                 {"N", CellKind::real},
                                                 {"eps_bound", CellKind::real},
                                                 {"eps_exact", CellKind::real},
                                                 {"eps_sim", CellKind::real},
                                                 {"ci95", CellKind::real},
                                                 {"k_req", CellKind::integer},
                                                 {"satisfied", CellKind::boolean}};
        return cols;
    }

    const std::vector<Column> &degradation_distance_columns()
    {
        static const std::vector<Column> cols = {{"D0", CellKind::real},
                                                 {"N", CellKind::real},
                                                 {"K", CellKind::integer},
                                                 {"eps_bound", CellKind::real},
                                                 {"eps_exact", CellKind::real}};
        return cols;
    }

    const std::vector<Column> &required_bits_columns()
    {
        static const std::vector<Column> cols = {{"M", CellKind::integer},
                                                 {"N", CellKind::integer},
                                                 {"k_req_raw", CellKind::real},
                                                 {"k_req", CellKind::integer},
                                                 {"feasible", CellKind::boolean}};
        return cols;
    }

    const std::vector<Column> &single_point_columns()
    {
        static const std::vector<Column> cols = {{"M", CellKind::integer},
                                                 {"N", CellKind::integer},
                                                 {"kappa", CellKind::real},
                                                 {"K", CellKind::integer},
                                                 {"snr_analytic", CellKind::real},
                                                 {"rate_analytic", CellKind::real},
                                                 {"rate_sim", CellKind::real},
                                                 {"ci95", CellKind::real},
                                                 {"eps_bound", CellKind::real},
                                                 {"eps_exact", CellKind::real},
                                                 {"eps_sim", CellKind::real},
                                                 {"eps_sim_ci95", CellKind::real}};
        return cols;
    }

    Scenario rate_size_scenario(const RunConfig &config)
    {
        return {"rate-size", config, "N", config.n_values, rate_size_columns()};
    }

    Scenario degradation_bits_scenario(const RunConfig &config)
    {
        std::vector<double> bits(config.bit_values.begin(), config.bit_values.end());
        return {"deg-bits", config, "K", bits, degradation_bits_columns()};
    }

    Scenario degradation_distance_scenario(const RunConfig &config)
    {
        return {"deg-distance", config, "D0", config.placement_d0_values, degradation_distance_columns()};
    }

    Report run_rate_size(const RunConfig &config)
    {
        validate(config);
        const auto model = path_loss_model(config);
        Report report{"rate-size", {rate_size_columns(), {}}, {}, {}};

        for (double side : config.n_values)
        {
            if (!integral_side(side))
                throw ConfigError("[run] n_values", fmt::format("panel side must be an integer (got {})", side));
            const auto n = std::size_t(side);
            const auto geom = square_geometry(config, n);
            const bool sim = simulated(config, side);
            RealMatrix phi;
            if (sim)
                phi = los_phases(exact_distances(geom), system_params(config).wavelength());

            for (double kappa : config.kappa_values)
            {
                const auto params = system_params(config).with_kappa(RicianFactor(kappa)).with_panel(n, n);
                const auto budget = center_budget(model, geom, params);
                std::vector<Cell> row{std::int64_t(n), kappa, achievable_rate(budget, params.kappa(), n, n),
                                      std::monostate{}, std::monostate{}};
                if (sim)
                {
                    const auto est = estimate_rate(params, budget, phi, optimal_phases(phi, config.phase_offset_rad),
                                                   config.trials, config.seed, engine(config));
                    row[3] = est.mean;
                    row[4] = est.ci_halfwidth;
                }
                report.table.rows.push_back(std::move(row));
            }
        }
        return report;
    }

    Report run_degradation_bits(const RunConfig &config)
    {
        validate(config);
        const auto model = path_loss_model(config);
        const auto base = system_params(config);
        Report report{"deg-bits", {degradation_bits_columns(), {}}, {}, {}};
        report.metadata.emplace_back("threshold", format_real(config.threshold));
        report.metadata.emplace_back("analytic_only", "rows without eps_exact/eps_sim exceed simulation_element_limit");

        for (double side : config.degradation_n_values)
        {
            const double elements = side * side;
            // The link budget does not depend on the panel size; evaluate it on a single element
            const auto budget = center_budget(model, square_geometry(config, 1), base);

            std::optional<int> k_req;
            try
            {
                k_req = required_bits(budget, base.kappa(), elements, config.threshold).bits;
            }
            catch (const InfeasibleError &)
            {
            }

            std::vector<RealMatrix> deltas;
            std::vector<DegradationEstimate> sims;
            if (simulated(config, side))
            {
                const auto n = std::size_t(side);
                const auto geom = square_geometry(config, n);
                const auto params = base.with_panel(n, n);
                deltas = phase_errors(geom, params, config.phase_offset_rad, config.bit_values);
                const auto phi = los_phases(exact_distances(geom), params.wavelength());
                sims = estimate_degradation(params, budget, phi, config.bit_values, config.trials, config.seed,
                                            engine(config), config.phase_offset_rad);
            }

            for (std::size_t k = 0; k < config.bit_values.size(); ++k)
            {
                const int bits = config.bit_values[k];
                const auto rep = degradation(budget, base.kappa(), elements, bits, config.threshold,
                                             deltas.empty() ? nullptr : &deltas[k]);
                std::vector<Cell> row{std::int64_t(bits), side, rep.epsilon_bound, optional_cell(rep.epsilon_exact),
                                      std::monostate{}, std::monostate{},
                                      k_req ? Cell(std::int64_t(*k_req)) : Cell(std::monostate{}), rep.satisfied};
                if (!sims.empty())
                {
                    row[4] = sims[k].ratio;
                    row[5] = sims[k].ci_halfwidth;
                }
                report.table.rows.push_back(std::move(row));
            }
        }
        return report;
    }

    Report run_degradation_distance(const RunConfig &config)
    {
        validate(config);
        const auto model = path_loss_model(config);
        const auto base = system_params(config);
        Report report{"deg-distance", {degradation_distance_columns(), {}}, {}, {}};
        report.metadata.emplace_back("placement", heights_note(config));
        report.metadata.emplace_back("total_distance_m", format_real(config.placement_total_m));

        for (double side : config.placement_n_values)
        {
            const double elements = side * side;
            for (double d0 : config.placement_d0_values)
            {
                auto placed = config;
                placed.bs_ris_distance_m = d0;
                placed.ris_user_distance_m = config.placement_total_m - d0;
                const auto budget = center_budget(model, square_geometry(placed, 1), base);

                std::vector<RealMatrix> deltas;
                if (simulated(config, side))
                {
                    const auto n = std::size_t(side);
                    deltas = phase_errors(square_geometry(placed, n), base.with_panel(n, n), config.phase_offset_rad,
                                          config.placement_bit_values);
                }
                for (std::size_t k = 0; k < config.placement_bit_values.size(); ++k)
                {
                    const int bits = config.placement_bit_values[k];
                    const auto rep = degradation(budget, base.kappa(), elements, bits, config.threshold,
                                                 deltas.empty() ? nullptr : &deltas[k]);
                    report.table.rows.push_back({d0, side, std::int64_t(bits), rep.epsilon_bound,
                                                 optional_cell(rep.epsilon_exact)});
                }
            }
        }
        return report;
    }

    Report run_required_bits(const RunConfig &config)
    {
        validate(config);
        const auto params = system_params(config);
        const auto geom = make_geometry(layout_spec(config));
        const auto budget = center_budget(path_loss_model(config), geom, params);
        const double elements = double(config.rows) * double(config.cols);

        Report report{"kreq", {required_bits_columns(), {}}, {}, {}};
        Cell raw = std::monostate{};
        Cell bits = std::monostate{};
        bool feasible = true;
        try
        {
            const auto req = required_bits(budget, params.kappa(), elements, config.threshold);
            raw = req.raw;
            bits = std::int64_t(req.bits);
            if (req.met_without_los)
                report.metadata.emplace_back("note", "threshold met by the NLoS term alone; reporting 1 bit");
        }
        catch (const InfeasibleError &e)
        {
            feasible = false;
            report.metadata.emplace_back("infeasible", e.what());
        }
        report.table.rows.push_back({std::int64_t(config.rows), std::int64_t(config.cols), raw, bits, feasible});
        report.summary = {{"k_req_raw", raw}, {"k_req", bits}, {"feasible", feasible}};
        return report;
    }

    Report run_single(const RunConfig &config)
    {
        validate(config);
        const auto params = system_params(config);
        const auto geom = make_geometry(layout_spec(config));
        const auto budget = farfield_budget(path_loss_model(config), geom, params, config.farfield_ratio);
        const auto phi = los_phases(exact_distances(geom), params.wavelength());
        const auto theta_star = optimal_phases(phi, config.phase_offset_rad);
        const auto delta = quantize(theta_star, QuantizerSpec(config.bits)).delta;
        const double elements = double(params.element_count());

        const auto rate = estimate_rate(params, budget, phi, theta_star, config.trials, config.seed, engine(config));
        const auto deg = degradation(budget, params.kappa(), elements, config.bits, config.threshold, &delta);
        const auto sim = estimate_degradation(params, budget, phi, config.bits, config.trials, config.seed,
                                              engine(config), config.phase_offset_rad);

        Report report{"single", {single_point_columns(), {}}, {}, {}};
        report.table.rows.push_back({std::int64_t(config.rows), std::int64_t(config.cols), config.rician_kappa,
                                     std::int64_t(config.bits), expected_snr_optimal(budget, params.kappa(), elements),
                                     achievable_rate(budget, params.kappa(), elements), rate.mean, rate.ci_halfwidth,
                                     deg.epsilon_bound, optional_cell(deg.epsilon_exact), sim.ratio, sim.ci_halfwidth});
        return report;
    }

} // namespace risq
