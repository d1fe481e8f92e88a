// Copyright 2026 The MicroTEE Simulator Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "microtee/words.hpp"

namespace microtee::crypto {

// Deterministic RNG for the whole simulator. mt19937_64 output is pinned
// by the C++ standard, so a given seed yields identical keys and nonces on
// every platform. Not a CSPRNG; the simulated device does not need one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  std::uint32_t next_u32() { return static_cast<std::uint32_t>(gen_()); }

  // Uniform in [0, bound), bound > 0. Rejection sampled, so unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  // Bytes come out of successive u64 draws, little-endian.
  void fill(std::uint8_t* out, std::size_t n) {
    while (n >= 8) {
      std::uint64_t v = gen_();
      for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
      out += 8;
      n -= 8;
    }
    if (n) {
      std::uint64_t v = gen_();
      for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<std::uint8_t>(v >> (8 * i));
    }
  }

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    fill(out.data(), n);
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace microtee::crypto
