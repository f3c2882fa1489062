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

#ifndef RISQ_RNG_HPP
#define RISQ_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace risq
{
    // xoshiro256++ with SplitMix64 seeding. Streams are keyed by (master seed, stream index) so that
    // trial t always draws the same numbers regardless of how many trials precede it or which worker runs it.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed);
        static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial);

        std::uint64_t next();

        // Uniform on (0, 1], 53-bit resolution
        double uniform();

        // Circularly-symmetric CN(0, 1): variance 1/2 per real component (Box-Muller)
        std::complex<double> complex_normal();

    private:
        std::array<std::uint64_t, 4> s_;
    };

    std::uint64_t splitmix64(std::uint64_t &state);

} // namespace risq

#endif
