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

#include "risq/analysis.hpp"
#include "risq/montecarlo.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

using namespace risq;
using namespace risq::testing;

namespace
{
    struct Setup
    {
        SystemParams params;
        LinkBudget budget;
        RealMatrix phi;
    };

    Setup reference_setup(std::size_t side, double kappa)
    {
        auto cfg = reference_config(side, side);
        cfg.rician_kappa = kappa;
        const auto geom = make_geometry(layout_spec(cfg));
        const auto params = system_params(cfg);
        return {params, reference_budget(cfg), los_phases(exact_distances(geom), params.wavelength())};
    }

    // Sample mean and 95 % half width, computed directly
    std::pair<double, double> mean_ci(const std::vector<double> &v)
    {
        const double n = double(v.size());
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
        double ss = 0.0;
        for (double x : v)
            ss += (x - mean) * (x - mean);
        return {mean, 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
    }
}

TEST(MonteCarlo, PairwiseSum)
{
    std::vector<double> v(1000);
    std::iota(v.begin(), v.end(), 1.0);
    EXPECT_EQ(pairwise_sum(v), 500500.0);
    EXPECT_EQ(pairwise_sum(std::span<const double>{}), 0.0);

    // 1 + 1e-16 repeated: naive left-to-right accumulation loses every small term
    std::vector<double> w(1 << 16, 1e-16);
    w[0] = 1.0;
    EXPECT_NEAR(pairwise_sum(w) - 1.0, 65535e-16, 1e-14);
}

TEST(MonteCarlo, SummarizeKnownSamples)
{
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto est = summarize(v, 5);
    EXPECT_DOUBLE_EQ(est.mean, 2.5);
    EXPECT_NEAR(est.ci_halfwidth, 1.96 * std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
    EXPECT_EQ(est.trials, 4u);
    EXPECT_EQ(est.master_seed, 5u);
    EXPECT_THROW(summarize(std::vector<double>{1.0}, 0), InvalidArgument);
}

TEST(MonteCarlo, PureLosHasNoSpread)
{
    const auto s = reference_setup(8, std::numeric_limits<double>::infinity());
    const auto est = estimate_rate(s.params, s.budget, s.phi, optimal_phases(s.phi), 50, 1);
    EXPECT_EQ(est.ci_halfwidth, 0.0);
    EXPECT_NEAR(est.mean, std::log2(1.0 + s.budget.eta_los * 64.0 * 64.0), 1e-12);
}

TEST(MonteCarlo, RepeatedRunsAreBitIdentical)
{
    const auto s = reference_setup(8, 4.0);
    const auto theta = optimal_phases(s.phi);
    EXPECT_EQ(estimate_rate(s.params, s.budget, s.phi, theta, 500, 77),
              estimate_rate(s.params, s.budget, s.phi, theta, 500, 77));
    EXPECT_NE(estimate_rate(s.params, s.budget, s.phi, theta, 500, 77).mean,
              estimate_rate(s.params, s.budget, s.phi, theta, 500, 78).mean);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults)
{
    const auto s = reference_setup(8, 4.0);
    const std::vector<PhaseMatrix> configs{optimal_phases(s.phi), quantize(optimal_phases(s.phi), QuantizerSpec(2)).theta};
    const auto reference = simulate_snr(s.params, s.budget, s.phi, configs, 1001, 9, {1});
    for (unsigned threads : {2u, 3u, 8u})
        EXPECT_EQ(simulate_snr(s.params, s.budget, s.phi, configs, 1001, 9, {threads}), reference) << threads;
    EXPECT_EQ(estimate_rate(s.params, s.budget, s.phi, configs[0], 999, 3, {1}),
              estimate_rate(s.params, s.budget, s.phi, configs[0], 999, 3, {4}));
}

TEST(MonteCarlo, TrialStreamsDoNotDependOnTrialCount)
{
    const auto s = reference_setup(4, 4.0);
    const std::vector<PhaseMatrix> configs{optimal_phases(s.phi)};
    const auto short_run = simulate_snr(s.params, s.budget, s.phi, configs, 100, 12);
    const auto long_run = simulate_snr(s.params, s.budget, s.phi, configs, 300, 12);
    for (std::size_t t = 0; t < 100; ++t)
        EXPECT_EQ(short_run[0][t], long_run[0][t]);
}

TEST(MonteCarlo, RateMatchesAnalytic)
{
    const auto s = reference_setup(16, 4.0);
    const double analytic = achievable_rate(s.budget, RicianFactor(4.0), 16, 16);
    const auto est = estimate_rate(s.params, s.budget, s.phi, optimal_phases(s.phi), 3000, 1);
    EXPECT_LE(std::abs(est.mean - analytic), std::max(2.0 * est.ci_halfwidth, 0.05));
}

TEST(MonteCarlo, OptimalSnrExpectation)
{
    const auto s = reference_setup(16, 4.0);
    const double oracle = expected_snr_optimal(s.budget, RicianFactor(4.0), 16, 16);
    const std::vector<PhaseMatrix> configs{optimal_phases(s.phi)};
    const auto [mean, ci] = mean_ci(simulate_snr(s.params, s.budget, s.phi, configs, 3000, 1)[0]);
    EXPECT_LE(std::abs(mean - oracle), ci);
}

TEST(MonteCarlo, QuantizedSnrExpectation)
{
    const auto s = reference_setup(8, 4.0);
    const auto q = quantize(optimal_phases(s.phi), QuantizerSpec(2));
    const double oracle = expected_snr_quantized(s.budget, RicianFactor(4.0), q.delta);
    const std::vector<PhaseMatrix> configs{q.theta};
    const auto [mean, ci] = mean_ci(simulate_snr(s.params, s.budget, s.phi, configs, 3000, 1)[0]);
    EXPECT_LE(std::abs(mean - oracle), ci);
}

TEST(MonteCarlo, RayleighSnrExpectation)
{
    const auto s = reference_setup(2, 0.0);
    const std::vector<PhaseMatrix> configs{optimal_phases(s.phi)};
    const auto samples = simulate_snr(s.params, s.budget, s.phi, configs, 100000, 3)[0];
    EXPECT_NEAR(mean_ci(samples).first / (s.budget.eta_nlos * 4.0), 1.0, 0.02);
}

TEST(MonteCarlo, FineQuantizationRatioIsOne)
{
    const auto s = reference_setup(8, 4.0);
    const auto est = estimate_degradation(s.params, s.budget, s.phi, 16, 500, 1);
    EXPECT_NEAR(est.ratio, 1.0, 1e-4);
    EXPECT_EQ(est.bits, 16);
}

TEST(MonteCarlo, DegradationRisesWithBits)
{
    const auto s = reference_setup(3, 4.0);
    const std::vector<int> bits{1, 2, 3, 4, 5};
    const auto est = estimate_degradation(s.params, s.budget, s.phi, bits, 3000, 1);
    ASSERT_EQ(est.size(), bits.size());
    for (std::size_t k = 1; k < est.size(); ++k)
        EXPECT_GT(est[k].ratio, est[k - 1].ratio) << "K = " << bits[k];
    EXPECT_LT(est[0].ratio, est[2].ratio);
    // Same optimal baseline for every K under common random numbers
    EXPECT_EQ(est[0].optimal, est[4].optimal);
}

TEST(MonteCarlo, ConfidenceIntervalShrinksAsRootT)
{
    const auto s = reference_setup(8, 4.0);
    const auto theta = optimal_phases(s.phi);
    const auto small = estimate_rate(s.params, s.budget, s.phi, theta, 1000, 21);
    const auto large = estimate_rate(s.params, s.budget, s.phi, theta, 4000, 21);
    EXPECT_NEAR(small.ci_halfwidth / large.ci_halfwidth, 2.0, 0.4);
}

TEST(MonteCarlo, PairingReducesVariance)
{
    const auto s = reference_setup(8, 4.0);
    const auto paired = estimate_degradation(s.params, s.budget, s.phi, 2, 2000, 5, {}, 0.0, Pairing::common);
    const auto unpaired = estimate_degradation(s.params, s.budget, s.phi, 2, 2000, 5, {}, 0.0, Pairing::independent);
    EXPECT_LE(paired.ci_halfwidth, unpaired.ci_halfwidth);
    EXPECT_NE(paired.quantized.mean, unpaired.quantized.mean);
}

TEST(MonteCarlo, InvalidInputsAreRejected)
{
    const auto s = reference_setup(4, 4.0);
    EXPECT_THROW(estimate_rate(s.params, s.budget, s.phi, optimal_phases(s.phi), 1, 1), InvalidArgument);
    EXPECT_THROW(estimate_rate(s.params, s.budget, s.phi, PhaseMatrix(RealMatrix::Zero(2, 2)), 10, 1), InvalidArgument);
}
