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

#include "risq/channel.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace risq;
using risq::testing::angle_gap;

namespace
{
    DistanceField single_path(double total)
    {
        RealMatrix one = RealMatrix::Constant(1, 1, total / 2.0);
        return {one, one, RealMatrix::Constant(1, 1, total)};
    }

    SystemParams params(double kappa, std::size_t rows, std::size_t cols)
    {
        return SystemParams(100.0, 2.5e-10, 5.9e9, 1.0, RicianFactor(kappa), rows, cols);
    }

    RealMatrix random_phases(std::size_t rows, std::size_t cols, std::uint64_t seed)
    {
        RandomStream rng(seed);
        RealMatrix phi(rows, cols);
        for (Eigen::Index i = 0; i < phi.size(); ++i)
            phi.data()[i] = kTwoPi * (1.0 - rng.uniform());
        return phi;
    }
}

TEST(Channel, FullWavelengthHasZeroPhase)
{
    const double lambda = 0.05;
    EXPECT_EQ(los_phases(single_path(lambda), lambda)(0, 0), 0.0);
    EXPECT_NEAR(los_phases(single_path(lambda / 4.0), lambda)(0, 0), std::numbers::pi / 2.0, 1e-12);
}

TEST(Channel, PhasesMatchDirectFormula)
{
    LayoutSpec layout;
    layout.rows = 4;
    layout.cols = 4;
    const auto field = exact_distances(make_geometry(layout));
    const double lambda = kSpeedOfLight / 5.9e9;
    RealMatrix expected(4, 4);
    for (Eigen::Index i = 0; i < expected.size(); ++i)
        expected.data()[i] = std::fmod(2.0 * std::numbers::pi / lambda * field.total.data()[i], 2.0 * std::numbers::pi);

    const auto phi = los_phases(field, lambda);
    for (Eigen::Index i = 0; i < phi.size(); ++i)
    {
        EXPECT_GE(phi.data()[i], 0.0);
        EXPECT_LT(phi.data()[i], kTwoPi);
        EXPECT_LE(angle_gap(phi.data()[i], expected.data()[i]), 1e-9);
    }
}

TEST(Channel, PureLosIsDeterministic)
{
    const auto p = params(std::numeric_limits<double>::infinity(), 3, 5);
    const auto budget = make_budget(2e-9, 5e-10, p);
    const RealMatrix phi = random_phases(3, 5, 7);

    RandomStream rng(11);
    const auto h = sample_channel(p, budget, phi, rng);
    for (Eigen::Index i = 0; i < phi.size(); ++i)
    {
        const auto expected = std::sqrt(2e-9) * std::polar(1.0, -phi.data()[i]);
        EXPECT_EQ(h.h_tilde.data()[i], expected);
    }
    RandomStream fresh(11);
    EXPECT_EQ(rng.next(), fresh.next()) << "pure LoS must not consume randomness";
}

TEST(Channel, SameStreamStateGivesIdenticalDraws)
{
    const auto p = params(4.0, 4, 4);
    const auto budget = make_budget(2e-9, 5e-10, p);
    const RealMatrix phi = random_phases(4, 4, 3);
    RandomStream a = RandomStream::for_trial(9, 123);
    RandomStream b = RandomStream::for_trial(9, 123);
    EXPECT_EQ(sample_channel(p, budget, phi, a).h_tilde, sample_channel(p, budget, phi, b).h_tilde);
}

TEST(Channel, SecondMomentRayleigh)
{
    const double pl_nlos = 5e-10;
    const auto p = params(0.0, 10, 10);
    const auto budget = make_budget(2e-9, pl_nlos, p);
    const RealMatrix phi = random_phases(10, 10, 5);
    double acc = 0.0;
    std::size_t count = 0;
    for (std::uint64_t t = 0; t < 1000; ++t)
    {
        auto rng = RandomStream::for_trial(42, t);
        acc += sample_channel(p, budget, phi, rng).h_tilde.cwiseAbs2().sum();
        count += 100;
    }
    EXPECT_NEAR(acc / double(count) / pl_nlos, 1.0, 0.02);
}

TEST(Channel, SecondMomentRician)
{
    const double kappa = 4.0, pl_los = 2e-9, pl_nlos = 5e-10;
    const double expected = (kappa * pl_los + pl_nlos) / (kappa + 1.0);
    const auto p = params(kappa, 10, 10);
    const auto budget = make_budget(pl_los, pl_nlos, p);
    const RealMatrix phi = random_phases(10, 10, 6);
    double acc = 0.0;
    for (std::uint64_t t = 0; t < 1000; ++t)
    {
        auto rng = RandomStream::for_trial(43, t);
        acc += sample_channel(p, budget, phi, rng).h_tilde.cwiseAbs2().sum();
    }
    EXPECT_NEAR(acc / 1e5 / expected, 1.0, 0.02);
}

TEST(Channel, AlignedSingleElementGivesEtaLos)
{
    const auto p = params(std::numeric_limits<double>::infinity(), 1, 1);
    const auto budget = make_budget(2e-9, 5e-10, p);
    const RealMatrix phi = RealMatrix::Constant(1, 1, 1.234);
    RandomStream rng(1);
    const auto h = sample_channel(p, budget, phi, rng);
    const PhaseMatrix theta(RealMatrix::Constant(1, 1, kTwoPi - 1.234));
    EXPECT_NEAR(received_snr(p, h, theta) / budget.eta_los, 1.0, 1e-12);
}

TEST(Channel, CoherentSumScalesWithElementCountSquared)
{
    for (auto [rows, cols] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{8, 8}, std::pair{5, 17}})
    {
        const auto p = params(std::numeric_limits<double>::infinity(), rows, cols);
        const auto budget = make_budget(2e-9, 5e-10, p);
        const RealMatrix phi = random_phases(rows, cols, 17);
        RandomStream rng(1);
        const auto h = sample_channel(p, budget, phi, rng);
        const double x = double(rows * cols);
        for (double c : {0.0, 1.0, 4.5})
            EXPECT_NEAR(received_snr(p, h, optimal_phases(phi, c)) / (budget.eta_los * x * x), 1.0, 1e-12);
    }
}

TEST(Channel, AntiphaseElementsCancel)
{
    const auto p = params(std::numeric_limits<double>::infinity(), 1, 2);
    const auto budget = make_budget(2e-9, 5e-10, p);
    const RealMatrix phi = RealMatrix::Zero(1, 2);
    RandomStream rng(1);
    const auto h = sample_channel(p, budget, phi, rng);
    RealMatrix theta(1, 2);
    theta << 0.0, std::numbers::pi;
    EXPECT_LE(received_snr(p, h, PhaseMatrix(theta)), budget.eta_los * 1e-28);
}

TEST(Channel, GlobalPhaseInvariance)
{
    const auto p = params(4.0, 4, 4);
    const auto budget = make_budget(2e-9, 5e-10, p);
    const RealMatrix phi = random_phases(4, 4, 8);
    RandomStream rng(2);
    const auto h = sample_channel(p, budget, phi, rng);
    const RealMatrix theta = random_phases(4, 4, 9);
    const double base = received_snr(p, h, PhaseMatrix(theta));
    for (double c : {0.3, 2.0, 5.9})
    {
        const auto shifted = PhaseMatrix::wrapped((theta.array() + c).matrix());
        EXPECT_NEAR(received_snr(p, h, shifted) / base, 1.0, 1e-12);
    }
}

TEST(Channel, SnrLinearInPowerAndAmplitudeSquared)
{
    const auto p = params(4.0, 3, 3);
    const auto budget = make_budget(2e-9, 5e-10, p);
    const RealMatrix phi = random_phases(3, 3, 10);
    RandomStream rng(3);
    const auto h = sample_channel(p, budget, phi, rng);
    const PhaseMatrix theta(random_phases(3, 3, 11));
    const double base = received_snr(p, h, theta);
    EXPECT_NEAR(received_snr(p.with_transmit_power(2.0 * p.transmit_power()), h, theta) / base, 2.0, 1e-12);
    EXPECT_NEAR(received_snr(p.with_reflection_amplitude(0.5), h, theta) / base, 0.25, 1e-12);
}

TEST(Channel, OptimalDominatesQuantizedInPureLos)
{
    const auto p = params(std::numeric_limits<double>::infinity(), 6, 6);
    const auto budget = make_budget(2e-9, 5e-10, p);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const RealMatrix phi = random_phases(6, 6, 100 + seed);
        RandomStream rng(seed);
        const auto h = sample_channel(p, budget, phi, rng);
        const auto best = optimal_phases(phi, 0.1 * double(seed));
        const double g_opt = received_snr(p, h, best);
        for (int k = 1; k <= 6; ++k)
            EXPECT_LE(received_snr(p, h, quantize(best, QuantizerSpec(k)).theta), g_opt * (1.0 + 1e-12));
    }
}

TEST(Channel, DimensionMismatchIsRejected)
{
    const auto p = params(4.0, 2, 2);
    const auto budget = make_budget(2e-9, 5e-10, p);
    RandomStream rng(1);
    const auto h = sample_channel(p, budget, RealMatrix::Zero(2, 2), rng);
    EXPECT_THROW(received_snr(p, h, PhaseMatrix(RealMatrix::Zero(2, 3))), InvalidArgument);
}

TEST(Channel, ComplexNormalMoments)
{
    RandomStream rng(2024);
    const int n = 200000;
    double re = 0.0, im = 0.0, re2 = 0.0, im2 = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const auto g = rng.complex_normal();
        re += g.real();
        im += g.imag();
        re2 += g.real() * g.real();
        im2 += g.imag() * g.imag();
    }
    EXPECT_NEAR(re / n, 0.0, 0.01);
    EXPECT_NEAR(im / n, 0.0, 0.01);
    EXPECT_NEAR(re2 / n, 0.5, 0.01);
    EXPECT_NEAR(im2 / n, 0.5, 0.01);
}
