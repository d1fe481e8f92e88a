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

#include "microtee/result.hpp"
#include "microtee/words.hpp"

namespace microtee::crypto {

// AES-128 block cipher. Round keys are expanded once at construction;
// block operations dispatch to AES-NI when the CPU supports it.
class Aes128 {
 public:
  static constexpr std::size_t BLOCK_SIZE = 16;
  static constexpr std::size_t KEY_SIZE = 16;
  static constexpr std::size_t NUM_ROUNDS = 10;

  explicit Aes128(const std::uint8_t key[KEY_SIZE]);

  void encrypt_block(const std::uint8_t in[BLOCK_SIZE],
                     std::uint8_t out[BLOCK_SIZE]) const;
  void decrypt_block(const std::uint8_t in[BLOCK_SIZE],
                     std::uint8_t out[BLOCK_SIZE]) const;

  // CBC over whole blocks; in/out may alias. iv is not modified.
  void cbc_encrypt(const std::uint8_t iv[BLOCK_SIZE], const std::uint8_t* in,
                   std::uint8_t* out, std::size_t nblocks) const;
  void cbc_decrypt(const std::uint8_t iv[BLOCK_SIZE], const std::uint8_t* in,
                   std::uint8_t* out, std::size_t nblocks) const;

 private:
  alignas(16) std::uint8_t enc_keys_[(NUM_ROUNDS + 1) * BLOCK_SIZE];
  // InvMixColumns round keys for the AES-NI equivalent inverse cipher.
  alignas(16) std::uint8_t dec_keys_[(NUM_ROUNDS + 1) * BLOCK_SIZE];
  bool hw_;
};

// CBC with PKCS#7 padding. Decrypt fails with BAD_PADDING on a bad pad and
// BAD_ARGUMENT when the ciphertext is empty or not block aligned.
Bytes aes128_cbc_encrypt(const std::uint8_t key[16], const std::uint8_t iv[16],
                         ByteSpan plaintext);
Result<Bytes> aes128_cbc_decrypt(const std::uint8_t key[16],
                                 const std::uint8_t iv[16], ByteSpan ciphertext);

// Raw CBC without padding, for test vectors; input must be block aligned.
Bytes aes128_cbc_encrypt_nopad(const std::uint8_t key[16],
                               const std::uint8_t iv[16], ByteSpan plaintext);
Bytes aes128_cbc_decrypt_nopad(const std::uint8_t key[16],
                               const std::uint8_t iv[16], ByteSpan ciphertext);

// True if the AES-NI path is in use.
bool aes128_hw_available();

}  // namespace microtee::crypto
