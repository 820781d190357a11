// SPDX-License-Identifier: Apache-2.0
//
// buspl - in-vehicle 60 GHz path loss modelling and link budget toolkit
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

#ifndef BUSPL_RANDOM_HPP
#define BUSPL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace buspl {

// Seeded source of uniform and standard-normal variates.
//
// The engine is std::mt19937_64 seeded through std::seed_seq, both of which are fully
// specified by the standard, so a (seed, stream_id) pair yields the same sequence on
// every conforming implementation. Normal variates use the Box-Muller transform and
// cache the second value of each pair. std::normal_distribution is avoided because its
// algorithm is implementation-defined.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    // Uniform on (0, 1], 53-bit resolution.
    double uniform();

    double standard_normal();

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace buspl

#endif
