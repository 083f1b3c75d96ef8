// Copyright 2026 planarsim Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSC_RNG_HPP
#define PSC_RNG_HPP

#include <cstdint>

namespace psc {

/// SplitMix64 finalizer; used both as a stand-alone mixer and to expand
/// seeds into generator state.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// PCG32 (XSH-RR variant). Small, fast, and with explicit stream selection,
/// which makes counter-derived substreams cheap.
class Pcg32 {
 public:
  Pcg32(uint64_t seed, uint64_t stream) {
    inc_ = (stream << 1u) | 1u;
    state_ = 0;
    next_u32();
    state_ += seed;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31));
  }

  uint64_t next_u64() {
    return (static_cast<uint64_t>(next_u32()) << 32) | next_u32();
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) without modulo bias.
  uint64_t next_below(uint64_t bound) {
    // Rejection sampling on the top of the range.
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) {
        return r % bound;
      }
    }
  }

 private:
  uint64_t state_;
  uint64_t inc_;
};

/// Counter-based substream derivation: the generator for a given
/// (master seed, stream tag, counter) triple is a pure function of the
/// triple, so trial results do not depend on scheduling or thread count.
inline Pcg32 substream_rng(uint64_t master_seed, uint64_t stream_tag,
                           uint64_t counter) {
  uint64_t a = splitmix64(master_seed ^ splitmix64(stream_tag));
  uint64_t b = splitmix64(a ^ splitmix64(counter + 0x517cc1b727220a95ULL));
  return Pcg32(b, splitmix64(b ^ counter));
}

}  // namespace psc

#endif
