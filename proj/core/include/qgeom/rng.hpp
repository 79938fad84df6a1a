/*
   Copyright 2026 qgeom contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace qgeom {

/// Philox 4x32, 10 rounds: the keyed counter-based bijection of Salmon et al.
/// One invocation maps a 128-bit counter and a 64-bit key to 128 output bits.
/// Exposed for known-answer testing; use RngStream for sampling.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter apply(Counter counter, Key key);
};

/// A deterministic substream of random numbers keyed by (seed, chunk_index).
///
/// The generator is counter-based: output block b of substream c under seed s
/// is Philox4x32-10 applied to counter (b_lo, b_hi, c_lo, c_hi) with key s.
/// Distinct chunk indices therefore yield statistically independent streams
/// that can be consumed concurrently, and identical (seed, chunk_index)
/// reproduce the identical sequence bit for bit.
///
/// Derived variates use fixed transforms so sequences are stable:
///  - uniform doubles take the top 53 bits of a 64-bit word,
///  - normals use the Box-Muller transform on one uniform pair (the second
///    variate of each pair is cached and returned next).
class RngStream {
public:
    static constexpr std::string_view kAlgorithmId =
        "philox4x32-10/u53/box-muller";

    RngStream(std::uint64_t seed, std::uint64_t chunk_index);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t chunk_index() const { return chunk_index_; }

    /// Next raw 64-bit word.
    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01();

    /// Uniform on (0, 1]; safe as a logarithm argument.
    double uniform01_positive();

    /// Standard normal variate.
    double normal();

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t chunk_index_;
    Philox4x32::Key key_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffer_left_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace qgeom
