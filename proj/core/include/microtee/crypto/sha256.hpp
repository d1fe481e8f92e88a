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

#include <array>
#include <cstdint>

#include "microtee/words.hpp"

namespace microtee::crypto {

using Digest256 = std::array<std::uint8_t, 32>;

// Incremental SHA-256. The compression function is picked once at startup:
// SHA extensions when the host CPU has them, portable code otherwise.
class Sha256 {
 public:
  static constexpr std::size_t DIGEST_SIZE = 32;
  static constexpr std::size_t BLOCK_SIZE = 64;

  Sha256();

  Sha256& update(ByteSpan data);
  Digest256 finish();

  static Digest256 digest(ByteSpan data) {
    Sha256 h;
    h.update(data);
    return h.finish();
  }

 private:
  std::uint32_t state_[8];
  std::uint8_t buf_[BLOCK_SIZE];
  std::size_t buf_len_ = 0;
  std::uint64_t total_len_ = 0;
};

Digest256 sha256(ByteSpan data);

// True if the SHA-NI path is in use.
bool sha256_hw_available();

}  // namespace microtee::crypto
