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

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

namespace risq
{
    namespace
    {
        constexpr double kLn2 = std::numbers::ln2;

        // ln(sum exp(terms)) over the finite terms; all terms are -inf -> -inf
        template <std::size_t K>
        double log_sum_exp(const std::array<double, K> &terms)
        {
            const double top = *std::max_element(terms.begin(), terms.end());
            if (std::isinf(top))
                return top;
            double rest = 0.0;
            bool top_seen = false;
            for (double t : terms)
            {
                if (t == top && !top_seen)
                {
                    top_seen = true;
                    continue;
                }
                rest += std::exp(t - top);
            }
            return top + std::log1p(rest);
        }

        double safe_log(double v)
        {
            return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
        }

        void check_elements(double elements)
        {
            if (!(elements >= 1.0) || !std::isfinite(elements))
                throw InvalidArgument(fmt::format("element count must be finite and >= 1 (got {})", elements));
        }
    } // namespace

    SnrCoefficients snr_coefficients(const LinkBudget &budget, const RicianFactor &kappa)
    {
        return {kappa.los_weight() * budget.eta_los, kappa.nlos_weight() * budget.eta_nlos};
    }

    double log1p_snr(const SnrCoefficients &coef, double elements, double coherence)
    {
        const double lx = std::log(elements);
        return log_sum_exp(std::array{0.0,
                                      safe_log(coef.nlos) + lx,
                                      safe_log(coef.los) + safe_log(coherence) + 2.0 * lx});
    }

    double expected_snr_optimal(const LinkBudget &budget, const RicianFactor &kappa, double elements)
    {
        check_elements(elements);
        const auto c = snr_coefficients(budget, kappa);
        return c.nlos * elements + c.los * elements * elements;
    }

    double expected_snr_optimal(const LinkBudget &budget, const RicianFactor &kappa, std::size_t rows, std::size_t cols)
    {
        return expected_snr_optimal(budget, kappa, double(rows) * double(cols));
    }

    double achievable_rate(const LinkBudget &budget, const RicianFactor &kappa, double elements)
    {
        check_elements(elements);
        return log1p_snr(snr_coefficients(budget, kappa), elements) / kLn2;
    }

    double achievable_rate(const LinkBudget &budget, const RicianFactor &kappa, std::size_t rows, std::size_t cols)
    {
        return achievable_rate(budget, kappa, double(rows) * double(cols));
    }

    double phase_error_coherence(const RealMatrix &delta)
    {
        if (delta.size() == 0)
            throw InvalidArgument("phase_error_coherence: empty error matrix");
        std::complex<double> sum{0.0, 0.0};
        for (Eigen::Index i = 0; i < delta.size(); ++i)
            sum += std::polar(1.0, -delta.data()[i]);
        const double x = double(delta.size());
        return std::min(1.0, std::norm(sum) / (x * x));
    }

    double coherence_bound(int bits)
    {
        if (bits < 1)
            throw InvalidArgument(fmt::format("coding bits must be >= 1 (got {})", bits));
        const double c = std::cos(std::ldexp(kTwoPi, -(bits + 1)));
        return c * c;
    }

    double expected_snr_quantized(const LinkBudget &budget, const RicianFactor &kappa, const RealMatrix &delta)
    {
        const auto c = snr_coefficients(budget, kappa);
        std::complex<double> sum{0.0, 0.0};
        for (Eigen::Index i = 0; i < delta.size(); ++i)
            sum += std::polar(1.0, -delta.data()[i]);
        return c.nlos * double(delta.size()) + c.los * std::norm(sum);
    }

    double snr_bound_quantized(const LinkBudget &budget, const RicianFactor &kappa, double elements, int bits)
    {
        check_elements(elements);
        const auto c = snr_coefficients(budget, kappa);
        return c.nlos * elements + c.los * elements * elements * coherence_bound(bits);
    }

    double snr_bound_quantized(const LinkBudget &budget, const RicianFactor &kappa, std::size_t rows, std::size_t cols,
                               int bits)
    {
        return snr_bound_quantized(budget, kappa, double(rows) * double(cols), bits);
    }

    double degradation_ratio(const SnrCoefficients &coef, double elements, double coherence)
    {
        const double full = log1p_snr(coef, elements, 1.0);
        if (!(full > 0.0))
            throw InvalidArgument("degradation: expected SNR is zero, rate ratio undefined");
        return log1p_snr(coef, elements, coherence) / full;
    }

    DegradationReport degradation(const LinkBudget &budget, const RicianFactor &kappa, double elements, int bits,
                                  double threshold, const RealMatrix *delta)
    {
        check_elements(elements);
        if (!(threshold > 0.0 && threshold <= 1.0))
            throw InvalidArgument(fmt::format("degradation threshold must lie in (0, 1] (got {})", threshold));
        const auto coef = snr_coefficients(budget, kappa);

        DegradationReport report{};
        report.bits = bits;
        report.threshold = threshold;
        report.epsilon_bound = degradation_ratio(coef, elements, coherence_bound(bits));
        if (delta)
        {
            if (double(delta->size()) != elements)
                throw InvalidArgument(fmt::format("degradation: error matrix has {} entries, expected {}", delta->size(), elements));
            report.epsilon_exact = degradation_ratio(coef, elements, phase_error_coherence(*delta));
        }
        report.satisfied = report.epsilon_bound >= threshold;
        return report;
    }

    double monotonicity_f(const LinkBudget &budget, const RicianFactor &kappa, double threshold, double elements)
    {
        check_elements(elements);
        if (!(threshold > 0.0 && threshold <= 1.0))
            throw InvalidArgument(fmt::format("degradation threshold must lie in (0, 1] (got {})", threshold));
        const auto coef = snr_coefficients(budget, kappa);
        if (!(coef.los > 0.0))
            throw InvalidArgument("monotonicity_f: requires a LoS component (kappa > 0)");
        if (threshold == 1.0)
            return 1.0; // (S - 1 - b x) / (a x^2) with S = 1 + b x + a x^2

        const double lx = std::log(elements);
        const double log_coherent = std::log(coef.los) + 2.0 * lx;
        const double log_full = log1p_snr(coef, elements, 1.0);
        const double log_incoherent = log_sum_exp(std::array{0.0, safe_log(coef.nlos) + lx});
        return std::exp(threshold * log_full - log_coherent) - std::exp(log_incoherent - log_coherent);
    }

    RequiredBits required_bits(const LinkBudget &budget, const RicianFactor &kappa, double elements, double threshold)
    {
        if (!(kappa.value() > 0.0))
            throw InvalidArgument("required_bits: requires kappa > 0");
        const double f = monotonicity_f(budget, kappa, threshold, elements);
        if (f >= 1.0)
            throw InfeasibleError(fmt::format(
                "threshold {} cannot be met by any finite number of coding bits (f = {:.17g} >= 1)", threshold, f));

        RequiredBits out{};
        out.met_without_los = f < 0.0;
        out.raw = std::log2(std::numbers::pi) - std::log2(std::acos(std::sqrt(std::max(f, 0.0))));
        out.bits = std::max(1, int(std::ceil(out.raw - kRequiredBitsSnap)));
        return out;
    }

} // namespace risq
