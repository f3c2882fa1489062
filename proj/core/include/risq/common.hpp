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

#ifndef RISQ_COMMON_HPP
#define RISQ_COMMON_HPP

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risq
{
    using Vec3 = Eigen::Vector3d;

    // Per-element quantities are stored [rows M, cols N], row-major so that the flat index of element (m, n) is m*N + n.
    using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    inline constexpr double kSpeedOfLight = 299792458.0; // [m/s]
    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

    // Invalid input values (out of range, inconsistent dimensions)
    class InvalidArgument : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A model's validity regime is violated (near field, far-field approximation outside its range)
    class PreconditionError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // The requested degradation threshold cannot be met by any finite number of coding bits
    class InfeasibleError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace risq

#endif
