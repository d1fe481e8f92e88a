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
#include <optional>
#include <string>
#include <vector>

#include "microtee/crypto/rsa.hpp"
#include "microtee/crypto/sha256.hpp"
#include "microtee/result.hpp"
#include "microtee/trace.hpp"
#include "microtee/words.hpp"

namespace microtee {

enum class Stage : std::uint8_t {
  BL1 = 1,
  SECURE_OS = 2,
  BL2 = 3,
  MOBILE_OS = 4,
  ROOT_TASK = 5,
};

const char* stage_name(Stage s);

// Verification order of the chain of trust. Note it differs from the tag
// numbering: ROM -> BL1 -> {SECURE_OS, BL2} -> ROOT_TASK -> MOBILE_OS.
inline constexpr std::array<Stage, 5> CHAIN_ORDER = {
    Stage::BL1, Stage::SECURE_OS, Stage::BL2, Stage::ROOT_TASK,
    Stage::MOBILE_OS};

// Image container, bit-exact layout:
//   magic "MTIM" (4 bytes)
//   stage_tag (1 byte)
//   payload_len (4-byte big-endian), payload
//   pubkey_len (4-byte big-endian), pubkey   (vendor key; only BL1 carries it)
//   signature (256 bytes over sha256(magic | stage_tag | payload_len | payload))
// Parsing is strict: the fields must consume the container exactly.
inline constexpr char IMAGE_MAGIC[4] = {'M', 'T', 'I', 'M'};
inline constexpr std::size_t IMAGE_SIG_SIZE = 256;

struct SignedImage {
  Stage stage_tag = Stage::BL1;
  Bytes payload;
  Bytes pubkey;
  Bytes signature;
};

Bytes serialize_image(const SignedImage& img);
Result<SignedImage> parse_image(ByteSpan data);

// The byte string the signature covers.
Bytes image_signed_region(Stage stage, const Bytes& payload);

// Signs payload for the given stage. embed_pubkey is stored in the pubkey
// field (pass the vendor SPKI blob for BL1, empty otherwise).
SignedImage make_signed_image(Stage stage, ByteSpan payload,
                              const crypto::RsaPrivateKey& key,
                              ByteSpan embed_pubkey);

struct RomState {
  crypto::Digest256 pubkey_hash{};  // hard-coded at the factory, immutable
};

// Signature check only; the container must already be parsed.
bool verify_image(const crypto::RsaPublicKey& pubkey, const SignedImage& img);

// ROM step: hash-checks the embedded vendor key, then verifies BL1 with
// it. On success hands back the trusted public key for later stages.
Result<crypto::RsaPublicKey> rom_verify(const RomState& rom, ByteSpan bl1_raw);

// Secure-OS step gating the Root Task launch.
Status kernel_verify_root_task(const crypto::RsaPublicKey& pubkey,
                               ByteSpan root_task_raw);

struct StageResult {
  Stage stage;
  bool ok;
  ErrorCode reason;  // OK when ok
};

struct BootReport {
  std::vector<StageResult> stages;  // chain order, stops after first failure
  bool booted = false;              // all five stages verified
  std::optional<Stage> halted_at;
  // The secure side is usable once BL1, SECURE_OS and ROOT_TASK verified,
  // even if the normal-world chain halted later.
  bool secure_ready = false;

  std::string render() const;
};

// Raw images indexed by chain order (CHAIN_ORDER[i] -> images[i]).
BootReport boot_chain(const RomState& rom, const std::array<Bytes, 5>& images,
                      EventTrace& trace);

// Conventional on-disk names, indexed like CHAIN_ORDER.
inline constexpr std::array<const char*, 5> IMAGE_FILENAMES = {
    "bl1.img", "secure_os.img", "bl2.img", "root_task.img", "mobile_os.img"};

}  // namespace microtee
