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

#ifndef RISQ_ANALYSIS_HPP
#define RISQ_ANALYSIS_HPP

#include "risq/propagation.hpp"
#include "risq/system.hpp"

#include <optional>

namespace risq
{
    // E[gamma] = b x + a c x^2 with x = MN elements and c the coherence of the reflected LoS paths:
    //   a = kappa eta_LoS / (kappa + 1),  b = eta_NLoS / (kappa + 1)
    struct SnrCoefficients
    {
        double los;  // a
        double nlos; // b
    };

    SnrCoefficients snr_coefficients(const LinkBudget &budget, const RicianFactor &kappa);

    // ln(1 + b x + a c x^2), evaluated through log-sum-exp so that x up to ~1e300 does not overflow
    double log1p_snr(const SnrCoefficients &coef, double elements, double coherence = 1.0);

    // Expected SNR with continuous optimal phases
    double expected_snr_optimal(const LinkBudget &budget, const RicianFactor &kappa, double elements);
    double expected_snr_optimal(const LinkBudget &budget, const RicianFactor &kappa, std::size_t rows, std::size_t cols);

    // log2(1 + E[gamma]) [bits/s/Hz]
    double achievable_rate(const LinkBudget &budget, const RicianFactor &kappa, double elements);
    double achievable_rate(const LinkBudget &budget, const RicianFactor &kappa, std::size_t rows, std::size_t cols);

    // |sum e^{-j delta}|^2 / (MN)^2, in [0, 1]
    double phase_error_coherence(const RealMatrix &delta);

    // cos^2(2 pi / 2^{K+1}), the worst-case coherence of a K-bit quantizer
    double coherence_bound(int bits);

    // E[gamma_hat] for a given quantization-error matrix
    double expected_snr_quantized(const LinkBudget &budget, const RicianFactor &kappa, const RealMatrix &delta);

    // Lower bound on E[gamma_hat] using the worst-case coherence
    double snr_bound_quantized(const LinkBudget &budget, const RicianFactor &kappa, double elements, int bits);
    double snr_bound_quantized(const LinkBudget &budget, const RicianFactor &kappa, std::size_t rows, std::size_t cols, int bits);

    struct DegradationReport
    {
        std::optional<double> epsilon_exact; // from the actual error matrix, absent for analytic-only sizes
        double epsilon_bound;                // from the worst-case coherence
        int bits;
        double threshold;
        bool satisfied; // epsilon_bound >= threshold
    };

    // Rate ratio log2(1 + E[gamma_hat]) / log2(1 + E[gamma]). Pass the quantization-error matrix to
    // obtain epsilon_exact; its size must equal `elements`.
    DegradationReport degradation(const LinkBudget &budget, const RicianFactor &kappa, double elements, int bits,
                                  double threshold, const RealMatrix *delta = nullptr);

    // Rate ratio for an arbitrary coherence c in [0, 1]
    double degradation_ratio(const SnrCoefficients &coef, double elements, double coherence);

    // f(x) = ((1 + b x + a x^2)^eps0 - 1 - b x) / (a x^2); required bits follow from cos^2(pi / 2^K) >= f(x).
    double monotonicity_f(const LinkBudget &budget, const RicianFactor &kappa, double threshold, double elements);

    struct RequiredBits
    {
        double raw;             // log2(pi) - log2(arccos(sqrt(f))), before integerization
        int bits;               // smallest integer K >= 1 meeting the threshold
        bool met_without_los;   // f < 0: the NLoS term alone meets the threshold
    };

    // Raw values within this distance above an integer are snapped down to it; this also yields the
    // large-panel limit K = 1 where f -> 0+.
    inline constexpr double kRequiredBitsSnap = 1e-9;

    // Throws InfeasibleError when f(MN) >= 1 (no finite K meets the threshold) and InvalidArgument
    // unless 0 < threshold <= 1 and kappa > 0.
    RequiredBits required_bits(const LinkBudget &budget, const RicianFactor &kappa, double elements, double threshold);

} // namespace risq

#endif
