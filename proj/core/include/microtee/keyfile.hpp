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
#include <string>

#include "microtee/crypto/rng.hpp"
#include "microtee/result.hpp"
#include "microtee/words.hpp"

namespace microtee {

// Key provisioning file, bit-exact layout:
//   magic "MTEE_KEYS\0" (10 bytes)
//   version byte 0x01
//   16-byte Root Key
//   4-byte big-endian length, RSA private key (PKCS#8 DER)
//   4-byte big-endian length, RSA public key (SubjectPublicKeyInfo DER)
inline constexpr char KEYFILE_MAGIC[10] = {'M', 'T', 'E', 'E', '_',
                                           'K', 'E', 'Y', 'S', '\0'};
inline constexpr std::uint8_t KEYFILE_VERSION = 0x01;

struct KeyFile {
  std::array<std::uint8_t, 16> root_key{};
  Bytes rsa_private_der;
  Bytes rsa_public_der;
};

Bytes serialize_keyfile(const KeyFile& kf);
Result<KeyFile> parse_keyfile(ByteSpan data);

Result<KeyFile> load_keyfile(const std::string& path);
Status save_keyfile(const std::string& path, const KeyFile& kf);

// Fresh Root Key plus a deterministic RSA-2048 pair from rng.
KeyFile provision_keys(crypto::Rng& rng);

// File helpers shared by the CLI and tests.
Result<Bytes> read_file(const std::string& path);
Status write_file(const std::string& path, ByteSpan data);

}  // namespace microtee
