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

// Internal CPUID probing for the crypto fast paths. Not installed.

#include <cstdint>

#if defined(__x86_64__) || defined(__i386__)
#include <cpuid.h>
#endif

namespace microtee::crypto::detail {

inline bool cpu_has_aesni() {
#if defined(__x86_64__) || defined(__i386__)
  unsigned a, b, c, d;
  if (!__get_cpuid(1, &a, &b, &c, &d)) return false;
  // AESNI (ECX bit 25) and SSE4.1 (ECX bit 19) for the loads and shuffles.
  return (c & (1u << 25)) && (c & (1u << 19));
#else
  return false;
#endif
}

inline bool cpu_has_shani() {
#if defined(__x86_64__) || defined(__i386__)
  unsigned a, b, c, d;
  if (!__get_cpuid_count(7, 0, &a, &b, &c, &d)) return false;
  // SHA (EBX bit 29); SSE4.1 checked via leaf 1.
  if (!(b & (1u << 29))) return false;
  if (!__get_cpuid(1, &a, &b, &c, &d)) return false;
  return (c & (1u << 19)) != 0;
#else
  return false;
#endif
}

// Compiled with -maes / -msha respectively, defined in the *_ni.cpp files.
void aesni_prepare_decrypt(const std::uint8_t enc_keys[176],
                           std::uint8_t dec_keys[176]);
void aesni_encrypt_block(const std::uint8_t enc_keys[176],
                         const std::uint8_t in[16], std::uint8_t out[16]);
void aesni_decrypt_block(const std::uint8_t dec_keys[176],
                         const std::uint8_t in[16], std::uint8_t out[16]);
void aesni_cbc_encrypt(const std::uint8_t enc_keys[176],
                       const std::uint8_t iv[16], const std::uint8_t* in,
                       std::uint8_t* out, std::size_t nblocks);
void aesni_cbc_decrypt(const std::uint8_t dec_keys[176],
                       const std::uint8_t iv[16], const std::uint8_t* in,
                       std::uint8_t* out, std::size_t nblocks);
void shani_compress(std::uint32_t state[8], const std::uint8_t* blocks,
                    std::size_t nblocks);

}  // namespace microtee::crypto::detail
