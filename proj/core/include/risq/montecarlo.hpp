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

#ifndef RISQ_MONTECARLO_HPP
#define RISQ_MONTECARLO_HPP

#include "risq/channel.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace risq
{
    struct EngineOptions
    {
        unsigned threads = 0; // 0 = hardware concurrency
    };

    struct RateEstimate
    {
        double mean;         // [bits/s/Hz]
        double ci_halfwidth; // 95 % normal-approximation half width
        std::size_t trials;
        std::uint64_t master_seed;

        friend bool operator==(const RateEstimate &, const RateEstimate &) = default;
    };

    // Pairwise (cascade) summation; result depends only on the values and their order
    double pairwise_sum(std::span<const double> values);

    // Mean and 95 % CI of per-trial samples; trials >= 2
    RateEstimate summarize(std::span<const double> samples, std::uint64_t master_seed);

    // gamma for every trial and every phase configuration. Trial t uses RandomStream::for_trial(seed, t),
    // and all configurations in one call see the same channel realization per trial.
    // Result is indexed [configuration][trial].
    std::vector<std::vector<double>> simulate_snr(const SystemParams &params, const LinkBudget &budget,
                                                  const RealMatrix &los_phase, std::span<const PhaseMatrix> configs,
                                                  std::size_t trials, std::uint64_t master_seed,
                                                  const EngineOptions &options = {});

    // E[log2(1 + gamma)] by sample mean
    RateEstimate estimate_rate(const SystemParams &params, const LinkBudget &budget, const RealMatrix &los_phase,
                               const PhaseMatrix &theta, std::size_t trials, std::uint64_t master_seed,
                               const EngineOptions &options = {});

    enum class Pairing
    {
        common,      // numerator and denominator share channel draws
        independent, // numerator uses a separate seed family
    };

    struct DegradationEstimate
    {
        int bits;
        double ratio;        // rate(quantized) / rate(optimal)
        double ci_halfwidth; // delta-method 95 % half width
        RateEstimate quantized;
        RateEstimate optimal;
    };

    // Simulated rate ratio for each K in `bits`, quantizing the optimal phases (common phase C).
    std::vector<DegradationEstimate> estimate_degradation(const SystemParams &params, const LinkBudget &budget,
                                                          const RealMatrix &los_phase, std::span<const int> bits,
                                                          std::size_t trials, std::uint64_t master_seed,
                                                          const EngineOptions &options = {},
                                                          double common_phase = 0.0,
                                                          Pairing pairing = Pairing::common);

    DegradationEstimate estimate_degradation(const SystemParams &params, const LinkBudget &budget,
                                             const RealMatrix &los_phase, int bits, std::size_t trials,
                                             std::uint64_t master_seed, const EngineOptions &options = {},
                                             double common_phase = 0.0, Pairing pairing = Pairing::common);

} // namespace risq

#endif
