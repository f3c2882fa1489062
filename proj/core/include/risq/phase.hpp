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

#ifndef RISQ_PHASE_HPP
#define RISQ_PHASE_HPP

#include "risq/common.hpp"

#include <cstdint>

namespace risq
{
    // Reduce an angle to [0, 2 pi)
    double wrap_phase(double angle);

    // Per-element phase shifts theta_{m,n}, every entry in [0, 2 pi)
    class PhaseMatrix
    {
    public:
        // Throws InvalidArgument if an entry lies outside [0, 2 pi)
        explicit PhaseMatrix(RealMatrix theta);

        // Wraps every entry into [0, 2 pi)
        static PhaseMatrix wrapped(const RealMatrix &angles);

        const RealMatrix &values() const { return theta_; }
        double operator()(Eigen::Index m, Eigen::Index n) const { return theta_(m, n); }
        Eigen::Index rows() const { return theta_.rows(); }
        Eigen::Index cols() const { return theta_.cols(); }

    private:
        RealMatrix theta_;
    };

    // Uniform K-bit codebook {s * 2 pi / 2^K : s = 0 .. 2^K - 1}
    class QuantizerSpec
    {
    public:
        explicit QuantizerSpec(int bits);

        int bits() const { return bits_; }
        std::uint64_t level_count() const { return std::uint64_t(1) << bits_; }
        double step() const { return step_; }
        double level(std::uint64_t s) const { return double(s) * step_; }

        // Half-open error interval [-step/2, step/2)
        double max_error() const { return 0.5 * step_; }

    private:
        int bits_;
        double step_;
    };

    // theta*_{m,n} = (C - phi_{m,n}) mod 2 pi: aligns every reflected path to the common phase C.
    PhaseMatrix optimal_phases(const RealMatrix &los_phase, double common_phase = 0.0);

    struct QuantizedPhases
    {
        PhaseMatrix theta; // codebook levels
        RealMatrix delta;  // theta* - theta_hat, each in [-step/2, step/2)
    };

    // Nearest codebook level by circular distance; an exact half-step tie resolves to delta = -step/2.
    QuantizedPhases quantize(const PhaseMatrix &theta_star, const QuantizerSpec &spec);

} // namespace risq

#endif
