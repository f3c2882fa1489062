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

#include "risq/montecarlo.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <thread>

namespace risq
{
    namespace
    {
        constexpr double kZ95 = 1.96;
        constexpr std::uint64_t kIndependentSeedSalt = 0x5851f42d4c957f2dULL;

        unsigned worker_count(const EngineOptions &options, std::size_t trials)
        {
            unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
            return unsigned(std::min<std::size_t>(n, trials));
        }

        // Runs body(begin, end) on contiguous trial blocks
        template <class Body>
        void parallel_blocks(std::size_t trials, unsigned workers, Body &&body)
        {
            if (workers <= 1)
            {
                body(std::size_t(0), trials);
                return;
            }
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            const std::size_t chunk = (trials + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w)
            {
                const std::size_t begin = std::min(trials, w * chunk);
                const std::size_t end = std::min(trials, begin + chunk);
                if (begin < end)
                    pool.emplace_back([&body, begin, end] { body(begin, end); });
            }
        }

        std::vector<double> to_rates(const std::vector<double> &snr)
        {
            std::vector<double> rates(snr.size());
            std::transform(snr.begin(), snr.end(), rates.begin(),
                           [](double g) { return std::log1p(g) / std::numbers::ln2; });
            return rates;
        }

        double sample_covariance(std::span<const double> x, double mx, std::span<const double> y, double my)
        {
            std::vector<double> prod(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                prod[i] = (x[i] - mx) * (y[i] - my);
            return pairwise_sum(prod) / double(x.size() - 1);
        }

        // Shifted by the first sample so that identical samples give exactly that value
        double sample_mean(std::span<const double> x)
        {
            std::vector<double> shifted(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                shifted[i] = x[i] - x[0];
            return x[0] + pairwise_sum(shifted) / double(x.size());
        }
    } // namespace

    double pairwise_sum(std::span<const double> values)
    {
        if (values.size() <= 16)
        {
            double s = 0.0;
            for (double v : values)
                s += v;
            return s;
        }
        const std::size_t half = values.size() / 2;
        return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
    }

    RateEstimate summarize(std::span<const double> samples, std::uint64_t master_seed)
    {
        if (samples.size() < 2)
            throw InvalidArgument(fmt::format("Monte Carlo estimate needs at least 2 trials (got {})", samples.size()));
        const double n = double(samples.size());
        const double mean = sample_mean(samples);
        const double var = sample_covariance(samples, mean, samples, mean);
        return {mean, kZ95 * std::sqrt(var / n), samples.size(), master_seed};
    }

    std::vector<std::vector<double>> simulate_snr(const SystemParams &params, const LinkBudget &budget,
                                                  const RealMatrix &los_phase, std::span<const PhaseMatrix> configs,
                                                  std::size_t trials, std::uint64_t master_seed,
                                                  const EngineOptions &options)
    {
        if (trials < 2)
            throw InvalidArgument(fmt::format("Monte Carlo estimate needs at least 2 trials (got {})", trials));
        for (const auto &theta : configs)
            if (theta.rows() != los_phase.rows() || theta.cols() != los_phase.cols())
                throw InvalidArgument(fmt::format("simulate_snr: phases are {} x {} but the panel is {} x {}",
                                                  theta.rows(), theta.cols(), los_phase.rows(), los_phase.cols()));

        const auto &kappa = params.kappa();
        const double los_amp = std::sqrt(kappa.los_weight() * budget.pl_los);
        const double nlos_amp = std::sqrt(kappa.nlos_weight() * budget.pl_nlos);
        const double scale = params.snr_scale();
        const std::size_t elements = std::size_t(los_phase.size());
        const std::size_t n_cfg = configs.size();

        // Per-configuration weights e^{-j theta} and the deterministic LoS sum
        std::vector<std::complex<double>> weights(n_cfg * elements);
        std::vector<std::complex<double>> los_sum(n_cfg);
        for (std::size_t c = 0; c < n_cfg; ++c)
        {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t i = 0; i < elements; ++i)
            {
                const auto w = std::polar(1.0, -configs[c].values().data()[i]);
                weights[c * elements + i] = w;
                acc += w * std::polar(los_amp, -los_phase.data()[i]);
            }
            los_sum[c] = acc;
        }

        std::vector<std::vector<double>> out(n_cfg, std::vector<double>(trials));
        if (kappa.is_pure_los())
        {
            for (std::size_t c = 0; c < n_cfg; ++c)
                std::fill(out[c].begin(), out[c].end(), scale * std::norm(los_sum[c]));
            return out;
        }

        parallel_blocks(trials, worker_count(options, trials), [&](std::size_t begin, std::size_t end)
                        {
                            std::vector<std::complex<double>> acc(n_cfg);
                            for (std::size_t t = begin; t < end; ++t)
                            {
                                auto rng = RandomStream::for_trial(master_seed, t);
                                std::fill(acc.begin(), acc.end(), std::complex<double>{0.0, 0.0});
                                for (std::size_t i = 0; i < elements; ++i)
                                {
                                    const auto g = rng.complex_normal();
                                    for (std::size_t c = 0; c < n_cfg; ++c)
                                        acc[c] += weights[c * elements + i] * g;
                                }
                                for (std::size_t c = 0; c < n_cfg; ++c)
                                    out[c][t] = scale * std::norm(los_sum[c] + nlos_amp * acc[c]);
                            } });
        return out;
    }

    RateEstimate estimate_rate(const SystemParams &params, const LinkBudget &budget, const RealMatrix &los_phase,
                               const PhaseMatrix &theta, std::size_t trials, std::uint64_t master_seed,
                               const EngineOptions &options)
    {
        const auto snr = simulate_snr(params, budget, los_phase, std::span(&theta, 1), trials, master_seed, options);
        return summarize(to_rates(snr.front()), master_seed);
    }

    std::vector<DegradationEstimate> estimate_degradation(const SystemParams &params, const LinkBudget &budget,
                                                          const RealMatrix &los_phase, std::span<const int> bits,
                                                          std::size_t trials, std::uint64_t master_seed,
                                                          const EngineOptions &options, double common_phase,
                                                          Pairing pairing)
    {
        std::vector<PhaseMatrix> configs;
        configs.reserve(bits.size() + 1);
        configs.push_back(optimal_phases(los_phase, common_phase));
        for (int k : bits)
            configs.push_back(quantize(configs.front(), QuantizerSpec(k)).theta);

        std::vector<std::vector<double>> rates;
        std::uint64_t quantized_seed = master_seed;
        if (pairing == Pairing::common)
        {
            for (auto &snr : simulate_snr(params, budget, los_phase, configs, trials, master_seed, options))
                rates.push_back(to_rates(snr));
        }
        else
        {
            quantized_seed = master_seed ^ kIndependentSeedSalt;
            auto optimal = simulate_snr(params, budget, los_phase, std::span(configs).first(1), trials, master_seed, options);
            auto quantized = simulate_snr(params, budget, los_phase, std::span(configs).subspan(1), trials, quantized_seed, options);
            rates.push_back(to_rates(optimal.front()));
            for (auto &snr : quantized)
                rates.push_back(to_rates(snr));
        }

        const auto opt = summarize(rates.front(), master_seed);
        if (!(opt.mean > 0.0))
            throw InvalidArgument("estimate_degradation: simulated optimal rate is zero");

        std::vector<DegradationEstimate> out;
        out.reserve(bits.size());
        const double n = double(trials);
        const double var_y = sample_covariance(rates.front(), opt.mean, rates.front(), opt.mean);
        for (std::size_t k = 0; k < bits.size(); ++k)
        {
            const auto &x = rates[k + 1];
            const auto q = summarize(x, quantized_seed);
            const double ratio = q.mean / opt.mean;
            const double var_x = sample_covariance(x, q.mean, x, q.mean);
            const double cov = pairing == Pairing::common ? sample_covariance(x, q.mean, rates.front(), opt.mean) : 0.0;
            const double var_ratio = std::max(0.0, var_x - 2.0 * ratio * cov + ratio * ratio * var_y) / (n * opt.mean * opt.mean);
            out.push_back({bits[k], ratio, kZ95 * std::sqrt(var_ratio), q, opt});
        }
        return out;
    }

    DegradationEstimate estimate_degradation(const SystemParams &params, const LinkBudget &budget,
                                             const RealMatrix &los_phase, int bits, std::size_t trials,
                                             std::uint64_t master_seed, const EngineOptions &options,
                                             double common_phase, Pairing pairing)
    {
        return estimate_degradation(params, budget, los_phase, std::span(&bits, 1), trials, master_seed, options,
                                    common_phase, pairing)
            .front();
    }

} // namespace risq
