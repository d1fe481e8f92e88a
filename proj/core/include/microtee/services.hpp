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
#include <functional>
#include <optional>

#include "microtee/crypto/rng.hpp"
#include "microtee/crypto/rsa.hpp"
#include "microtee/crypto/sha256.hpp"
#include "microtee/kernel.hpp"
#include "microtee/keyfile.hpp"
#include "microtee/task.hpp"
#include "microtee/wire.hpp"

namespace microtee {

// Sealed-blob container: [version 1][iv 16][ciphertext][tag 32].
// The tag is HMAC-SHA256 over iv | ciphertext under a key derived from
// the Root Key by hashing it with a fixed label.
struct SealedBlob {
  std::uint8_t version = 1;
  std::array<std::uint8_t, 16> iv{};
  Bytes ciphertext;
  std::array<std::uint8_t, 32> integrity_tag{};
};

inline constexpr std::uint8_t SEALED_BLOB_VERSION = 1;
inline constexpr std::size_t SEALED_BLOB_MIN_SIZE = 1 + 16 + 16 + 32;
inline constexpr std::size_t MAX_SEAL_BYTES = 64 * 1024;

Bytes serialize_sealed(const SealedBlob& blob);
Result<SealedBlob> parse_sealed(ByteSpan data);  // INTEGRITY_FAIL if malformed

// Crypto Service: stateless algorithm provider working on caller-supplied
// key material. Holds only its own benchmark RSA keys, no platform keys.
//
// Request payload layouts (inline words or shared buffer, see wire.hpp):
//   AES_ENC / AES_DEC: [key_len u8][key][iv 16][data...]
//   SHA256:            [data...]
//   RSA_SIGN:          [key_bits be32][data...]
//   RSA_VERIFY:        [key_bits be32][sig_len be32][sig][data...]
//   ECHO:              [data...]
class CryptoService : public Task {
 public:
  CryptoService(Kernel& kernel, std::uint64_t rng_seed);

  void set_endpoint(CapSlot slot) { ep_slot_ = slot; }
  void resume(Machine& m) override;
  const char* name() const override { return "crypto_service"; }

  // Request handling is also callable directly for unit testing.
  ServiceResponse handle(const ServiceRequest& req);

  // Generated on first use; RSA keygen is the expensive part of bringing
  // a service up, and most runs never touch it.
  const crypto::RsaKeyPair& bench_key(unsigned bits);

 private:
  Kernel& kernel_;
  crypto::Rng rng_;
  CapSlot ep_slot_ = NULL_SLOT;
  std::optional<crypto::RsaKeyPair> rsa1024_;
  std::optional<crypto::RsaKeyPair> rsa2048_;
};

// Key Management: the only holder of the Root Key and the Device Key
// private half. Exposes sealing and attestation; the keys themselves are
// not reachable through any request.
//
// Request payload layouts:
//   SEAL:              [data...]            (1 byte .. 64 KiB)
//   UNSEAL:            [serialized blob]
//   ATTEST:            [claims...]          (non-empty)
//   GET_ATTEST_PUBKEY: []
class KeyManagementService : public Task {
 public:
  KeyManagementService(Kernel& kernel, std::uint64_t rng_seed,
                       const KeyFile& keys);

  void set_endpoint(CapSlot slot) { ep_slot_ = slot; }
  void resume(Machine& m) override;
  const char* name() const override { return "key_management"; }

  ServiceResponse handle(const ServiceRequest& req);

  // The one exportable piece of the Device Key.
  const Bytes& attestation_public_key() const { return device_pub_der_; }

 private:
  Bytes seal(ByteSpan data);
  Result<Bytes> unseal(ByteSpan blob_bytes);

  Kernel& kernel_;
  crypto::Rng rng_;
  CapSlot ep_slot_ = NULL_SLOT;
  std::array<std::uint8_t, 16> root_key_{};
  std::array<std::uint8_t, 32> seal_tag_key_{};
  crypto::RsaPrivateKey device_priv_;
  Bytes device_pub_der_;
  bool device_key_ok_ = false;
};

// Shared server loop: drains delivered requests, replies, returns once
// the endpoint recv blocks. Payloads beyond the inline limit travel in
// the shared buffer named by the request; the response is written back
// into the same buffer.
void serve_requests(Kernel& kernel, TcbRef tcb, CapSlot ep_slot,
                    const std::function<ServiceResponse(const ServiceRequest&)>&
                        handler);

}  // namespace microtee
