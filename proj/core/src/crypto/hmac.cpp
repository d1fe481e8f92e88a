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

#include "microtee/crypto/hmac.hpp"

#include <cstring>

namespace microtee::crypto {

Digest256 hmac_sha256(ByteSpan key, ByteSpan data) {
  std::uint8_t block[Sha256::BLOCK_SIZE] = {};
  if (key.size() > Sha256::BLOCK_SIZE) {
    Digest256 kd = sha256(key);
    std::memcpy(block, kd.data(), kd.size());
  } else if (!key.empty()) {
    std::memcpy(block, key.data(), key.size());
  }

  std::uint8_t ipad[Sha256::BLOCK_SIZE], opad[Sha256::BLOCK_SIZE];
  for (std::size_t i = 0; i < Sha256::BLOCK_SIZE; ++i) {
    ipad[i] = block[i] ^ 0x36;
    opad[i] = block[i] ^ 0x5c;
  }

  Sha256 inner;
  inner.update(ipad).update(data);
  Digest256 inner_digest = inner.finish();

  Sha256 outer;
  outer.update(opad).update(inner_digest);
  return outer.finish();
}

bool digests_equal(ByteSpan a, ByteSpan b) {
  if (a.size() != b.size()) return false;
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff |= a[i] ^ b[i];
  return diff == 0;
}

}  // namespace microtee::crypto
