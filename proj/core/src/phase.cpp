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

#include "risq/phase.hpp"

#include <fmt/format.h>

#include <cmath>

namespace risq
{
    double wrap_phase(double angle)
    {
        double r = std::fmod(angle, kTwoPi);
        if (r < 0.0)
            r += kTwoPi;
        // fmod of a tiny negative value plus 2 pi can round up to 2 pi
        if (r >= kTwoPi)
            r = 0.0;
        return r;
    }

    PhaseMatrix::PhaseMatrix(RealMatrix theta) : theta_(std::move(theta))
    {
        for (Eigen::Index i = 0; i < theta_.size(); ++i)
        {
            const double v = theta_.data()[i];
            if (!(v >= 0.0 && v < kTwoPi))
                throw InvalidArgument(fmt::format("PhaseMatrix: entry {} = {} outside [0, 2pi)", i, v));
        }
    }

    PhaseMatrix PhaseMatrix::wrapped(const RealMatrix &angles)
    {
        return PhaseMatrix(angles.unaryExpr([](double a) { return wrap_phase(a); }));
    }

    QuantizerSpec::QuantizerSpec(int bits) : bits_(bits)
    {
        if (bits_ < 1 || bits_ > 62)
            throw InvalidArgument(fmt::format("QuantizerSpec: coding bits must be in [1, 62] (got {})", bits_));
        step_ = std::ldexp(kTwoPi, -bits_);
    }

    PhaseMatrix optimal_phases(const RealMatrix &los_phase, double common_phase)
    {
        return PhaseMatrix::wrapped(los_phase.unaryExpr([common_phase](double phi) { return common_phase - phi; }));
    }

    QuantizedPhases quantize(const PhaseMatrix &theta_star, const QuantizerSpec &spec)
    {
        const double step = spec.step();
        const double half = spec.max_error();
        const auto levels = std::int64_t(spec.level_count());

        RealMatrix theta_hat(theta_star.rows(), theta_star.cols());
        RealMatrix delta(theta_star.rows(), theta_star.cols());

        for (Eigen::Index i = 0; i < theta_hat.size(); ++i)
        {
            const double t = theta_star.values().data()[i];
            auto index = std::int64_t(std::floor(t / step + 0.5));
            double err = t - double(index) * step;
            // Rounding in t / step can leave err a hair outside the half-open interval
            if (err >= half)
            {
                ++index;
                err = t - double(index) * step;
            }
            else if (err < -half)
            {
                --index;
                err = t - double(index) * step;
            }
            index %= levels;
            theta_hat.data()[i] = double(index) * step;
            delta.data()[i] = err;
        }
        return {PhaseMatrix(std::move(theta_hat)), std::move(delta)};
    }

} // namespace risq
