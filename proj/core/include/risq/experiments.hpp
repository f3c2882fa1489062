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

#ifndef RISQ_EXPERIMENTS_HPP
#define RISQ_EXPERIMENTS_HPP

#include "risq/config.hpp"
#include "risq/report.hpp"

#include <string>
#include <vector>

namespace risq
{
    struct Scenario
    {
        std::string name;
        RunConfig base_config;
        std::string sweep_variable;
        std::vector<double> sweep_values;
        std::vector<Column> outputs;
    };

    // Rate vs panel size, square panels (M = N), every N x kappa pair
    Scenario rate_size_scenario(const RunConfig &config);
    // Rate degradation vs coding bits for several panel sizes
    Scenario degradation_bits_scenario(const RunConfig &config);
    // Rate degradation vs BS-RIS distance with a fixed total path length
    Scenario degradation_distance_scenario(const RunConfig &config);

    const std::vector<Column> &rate_size_columns();          // N,kappa,rate_analytic,rate_sim,ci95
    const std::vector<Column> &degradation_bits_columns();   // K,N,eps_bound,eps_exact,eps_sim,ci95,k_req,satisfied
    const std::vector<Column> &degradation_distance_columns(); // D0,N,K,eps_bound,eps_exact
    const std::vector<Column> &required_bits_columns();      // M,N,k_req_raw,k_req,feasible
    const std::vector<Column> &single_point_columns();

    Report run_rate_size(const RunConfig &config);
    Report run_degradation_bits(const RunConfig &config);
    Report run_degradation_distance(const RunConfig &config);

    // Required coding bits for the configured panel; an infeasible threshold yields feasible = false
    Report run_required_bits(const RunConfig &config);

    // Analytic and simulated rate and degradation for the configured panel, kappa and bits
    Report run_single(const RunConfig &config);

} // namespace risq

#endif
