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

#include "risq/rng.hpp"
#include "risq/common.hpp"

#include <bit>
#include <cmath>

namespace risq
{
    std::uint64_t splitmix64(std::uint64_t &state)
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    RandomStream::RandomStream(std::uint64_t seed)
    {
        for (auto &word : s_)
            word = splitmix64(seed);
    }

    RandomStream RandomStream::for_trial(std::uint64_t master_seed, std::uint64_t trial)
    {
        // Mix the two keys through independent SplitMix64 rounds before seeding
        std::uint64_t a = master_seed;
        std::uint64_t b = trial ^ 0x6a09e667f3bcc909ULL;
        const std::uint64_t key = splitmix64(a) ^ std::rotl(splitmix64(b), 17);
        return RandomStream(key);
    }

    std::uint64_t RandomStream::next()
    {
        const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = std::rotl(s_[3], 45);
        return result;
    }

    double RandomStream::uniform()
    {
        return double((next() >> 11) + 1) * 0x1.0p-53;
    }

    std::complex<double> RandomStream::complex_normal()
    {
        const double radius = std::sqrt(-std::log(uniform()));
        const double angle = kTwoPi * uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

} // namespace risq
