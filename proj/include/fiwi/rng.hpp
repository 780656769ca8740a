// Copyright 2026 The fiwi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Platform-independent seeded randomness.
//
// Every stream is a std::mt19937_64 (whose output sequence is fixed by the
// C++ standard) keyed by SplitMix64 over (seed, stream, substream). Variates
// are derived with explicit formulas rather than <random> distributions,
// whose algorithms differ between standard libraries.

#ifndef FIWI_RNG_HPP_
#define FIWI_RNG_HPP_

#include <cstdint>
#include <random>

namespace fiwi {

// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

// Key for stream (a, b) under `seed`, e.g. (AP n, UE k).
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
      : engine_(stream_key(seed, a, b)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Exponential with the given mean, by inversion.
  double exponential(double mean);

  // Uniform integer on [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fiwi

#endif  // FIWI_RNG_HPP_
