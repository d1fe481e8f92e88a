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

// AES-NI block and CBC helpers. Built with -maes -msse4.1; callers must
// check cpu_has_aesni() first. Round keys are the byte layout produced by
// the portable key schedule, loadable directly as __m128i.

#include "cpu_features.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace microtee::crypto::detail {
namespace {

inline __m128i load_rk(const std::uint8_t* rk, int round) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(rk + 16 * round));
}

inline __m128i encrypt(__m128i block, const std::uint8_t* rk) {
  block = _mm_xor_si128(block, load_rk(rk, 0));
  for (int r = 1; r < 10; ++r) block = _mm_aesenc_si128(block, load_rk(rk, r));
  return _mm_aesenclast_si128(block, load_rk(rk, 10));
}

// Equivalent inverse cipher: round keys 10..0 with keys 1..9 passed
// through InvMixColumns (done in aesni_prepare_decrypt).
inline __m128i decrypt(__m128i block, const std::uint8_t* rk) {
  block = _mm_xor_si128(block, load_rk(rk, 10));
  for (int r = 9; r > 0; --r) block = _mm_aesdec_si128(block, load_rk(rk, r));
  return _mm_aesdeclast_si128(block, load_rk(rk, 0));
}

}  // namespace

void aesni_prepare_decrypt(const std::uint8_t enc_keys[176],
                           std::uint8_t dec_keys[176]) {
  auto* out = reinterpret_cast<__m128i*>(dec_keys);
  _mm_storeu_si128(out + 0, load_rk(enc_keys, 0));
  for (int r = 1; r < 10; ++r)
    _mm_storeu_si128(out + r, _mm_aesimc_si128(load_rk(enc_keys, r)));
  _mm_storeu_si128(out + 10, load_rk(enc_keys, 10));
}

void aesni_encrypt_block(const std::uint8_t enc_keys[176],
                         const std::uint8_t in[16], std::uint8_t out[16]) {
  __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in));
  _mm_storeu_si128(reinterpret_cast<__m128i*>(out), encrypt(b, enc_keys));
}

void aesni_decrypt_block(const std::uint8_t dec_keys[176],
                         const std::uint8_t in[16], std::uint8_t out[16]) {
  __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in));
  _mm_storeu_si128(reinterpret_cast<__m128i*>(out), decrypt(b, dec_keys));
}

void aesni_cbc_encrypt(const std::uint8_t enc_keys[176],
                       const std::uint8_t iv[16], const std::uint8_t* in,
                       std::uint8_t* out, std::size_t nblocks) {
  __m128i chain = _mm_loadu_si128(reinterpret_cast<const __m128i*>(iv));
  for (std::size_t b = 0; b < nblocks; ++b) {
    __m128i p = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + 16 * b));
    chain = encrypt(_mm_xor_si128(p, chain), enc_keys);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + 16 * b), chain);
  }
}

void aesni_cbc_decrypt(const std::uint8_t dec_keys[176],
                       const std::uint8_t iv[16], const std::uint8_t* in,
                       std::uint8_t* out, std::size_t nblocks) {
  __m128i chain = _mm_loadu_si128(reinterpret_cast<const __m128i*>(iv));
  for (std::size_t b = 0; b < nblocks; ++b) {
    __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + 16 * b));
    __m128i p = _mm_xor_si128(decrypt(c, dec_keys), chain);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + 16 * b), p);
    chain = c;
  }
}

}  // namespace microtee::crypto::detail

#else

namespace microtee::crypto::detail {

void aesni_prepare_decrypt(const std::uint8_t*, std::uint8_t*) {}
void aesni_encrypt_block(const std::uint8_t*, const std::uint8_t*, std::uint8_t*) {}
void aesni_decrypt_block(const std::uint8_t*, const std::uint8_t*, std::uint8_t*) {}
void aesni_cbc_encrypt(const std::uint8_t*, const std::uint8_t*,
                       const std::uint8_t*, std::uint8_t*, std::size_t) {}
void aesni_cbc_decrypt(const std::uint8_t*, const std::uint8_t*,
                       const std::uint8_t*, std::uint8_t*, std::size_t) {}

}  // namespace microtee::crypto::detail

#endif
