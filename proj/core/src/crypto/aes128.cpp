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

#include "microtee/crypto/aes128.hpp"

#include <cstring>

#include "cpu_features.hpp"

namespace microtee::crypto {
namespace {

constexpr std::uint8_t SBOX[256] = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b,
    0xfe, 0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0,
    0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26,
    0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2,
    0xeb, 0x27, 0xb2, 0x75, 0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0,
    0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed,
    0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f,
    0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5,
    0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c, 0x13, 0xec,
    0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14,
    0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c,
    0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d,
    0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f,
    0x4b, 0xbd, 0x8b, 0x8a, 0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e,
    0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11,
    0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f,
    0xb0, 0x54, 0xbb, 0x16};

constexpr std::uint8_t INV_SBOX[256] = {
    0x52, 0x09, 0x6a, 0xd5, 0x30, 0x36, 0xa5, 0x38, 0xbf, 0x40, 0xa3, 0x9e,
    0x81, 0xf3, 0xd7, 0xfb, 0x7c, 0xe3, 0x39, 0x82, 0x9b, 0x2f, 0xff, 0x87,
    0x34, 0x8e, 0x43, 0x44, 0xc4, 0xde, 0xe9, 0xcb, 0x54, 0x7b, 0x94, 0x32,
    0xa6, 0xc2, 0x23, 0x3d, 0xee, 0x4c, 0x95, 0x0b, 0x42, 0xfa, 0xc3, 0x4e,
    0x08, 0x2e, 0xa1, 0x66, 0x28, 0xd9, 0x24, 0xb2, 0x76, 0x5b, 0xa2, 0x49,
    0x6d, 0x8b, 0xd1, 0x25, 0x72, 0xf8, 0xf6, 0x64, 0x86, 0x68, 0x98, 0x16,
    0xd4, 0xa4, 0x5c, 0xcc, 0x5d, 0x65, 0xb6, 0x92, 0x6c, 0x70, 0x48, 0x50,
    0xfd, 0xed, 0xb9, 0xda, 0x5e, 0x15, 0x46, 0x57, 0xa7, 0x8d, 0x9d, 0x84,
    0x90, 0xd8, 0xab, 0x00, 0x8c, 0xbc, 0xd3, 0x0a, 0xf7, 0xe4, 0x58, 0x05,
    0xb8, 0xb3, 0x45, 0x06, 0xd0, 0x2c, 0x1e, 0x8f, 0xca, 0x3f, 0x0f, 0x02,
    0xc1, 0xaf, 0xbd, 0x03, 0x01, 0x13, 0x8a, 0x6b, 0x3a, 0x91, 0x11, 0x41,
    0x4f, 0x67, 0xdc, 0xea, 0x97, 0xf2, 0xcf, 0xce, 0xf0, 0xb4, 0xe6, 0x73,
    0x96, 0xac, 0x74, 0x22, 0xe7, 0xad, 0x35, 0x85, 0xe2, 0xf9, 0x37, 0xe8,
    0x1c, 0x75, 0xdf, 0x6e, 0x47, 0xf1, 0x1a, 0x71, 0x1d, 0x29, 0xc5, 0x89,
    0x6f, 0xb7, 0x62, 0x0e, 0xaa, 0x18, 0xbe, 0x1b, 0xfc, 0x56, 0x3e, 0x4b,
    0xc6, 0xd2, 0x79, 0x20, 0x9a, 0xdb, 0xc0, 0xfe, 0x78, 0xcd, 0x5a, 0xf4,
    0x1f, 0xdd, 0xa8, 0x33, 0x88, 0x07, 0xc7, 0x31, 0xb1, 0x12, 0x10, 0x59,
    0x27, 0x80, 0xec, 0x5f, 0x60, 0x51, 0x7f, 0xa9, 0x19, 0xb5, 0x4a, 0x0d,
    0x2d, 0xe5, 0x7a, 0x9f, 0x93, 0xc9, 0x9c, 0xef, 0xa0, 0xe0, 0x3b, 0x4d,
    0xae, 0x2a, 0xf5, 0xb0, 0xc8, 0xeb, 0xbb, 0x3c, 0x83, 0x53, 0x99, 0x61,
    0x17, 0x2b, 0x04, 0x7e, 0xba, 0x77, 0xd6, 0x26, 0xe1, 0x69, 0x14, 0x63,
    0x55, 0x21, 0x0c, 0x7d};

inline std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x >> 7) * 0x1b));
}

inline std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

void expand_key(const std::uint8_t key[16], std::uint8_t rk[176]) {
  std::memcpy(rk, key, 16);
  std::uint8_t rcon = 1;
  for (int i = 16; i < 176; i += 4) {
    std::uint8_t t[4];
    std::memcpy(t, rk + i - 4, 4);
    if (i % 16 == 0) {
      // RotWord + SubWord + Rcon.
      std::uint8_t tmp = t[0];
      t[0] = static_cast<std::uint8_t>(SBOX[t[1]] ^ rcon);
      t[1] = SBOX[t[2]];
      t[2] = SBOX[t[3]];
      t[3] = SBOX[tmp];
      rcon = xtime(rcon);
    }
    for (int j = 0; j < 4; ++j) rk[i + j] = rk[i - 16 + j] ^ t[j];
  }
}

void encrypt_scalar(const std::uint8_t rk[176], const std::uint8_t in[16],
                    std::uint8_t out[16]) {
  std::uint8_t s[16];
  for (int i = 0; i < 16; ++i) s[i] = in[i] ^ rk[i];

  for (int round = 1; round <= 10; ++round) {
    std::uint8_t t[16];
    // SubBytes + ShiftRows fused: column c of t takes its rows from
    // columns c, c+1, c+2, c+3.
    for (int c = 0; c < 4; ++c) {
      t[4 * c + 0] = SBOX[s[(4 * c + 0) % 16]];
      t[4 * c + 1] = SBOX[s[(4 * c + 5) % 16]];
      t[4 * c + 2] = SBOX[s[(4 * c + 10) % 16]];
      t[4 * c + 3] = SBOX[s[(4 * c + 15) % 16]];
    }
    if (round < 10) {
      for (int c = 0; c < 4; ++c) {
        std::uint8_t a0 = t[4 * c], a1 = t[4 * c + 1], a2 = t[4 * c + 2],
                     a3 = t[4 * c + 3];
        s[4 * c + 0] = xtime(a0) ^ (xtime(a1) ^ a1) ^ a2 ^ a3;
        s[4 * c + 1] = a0 ^ xtime(a1) ^ (xtime(a2) ^ a2) ^ a3;
        s[4 * c + 2] = a0 ^ a1 ^ xtime(a2) ^ (xtime(a3) ^ a3);
        s[4 * c + 3] = (xtime(a0) ^ a0) ^ a1 ^ a2 ^ xtime(a3);
      }
    } else {
      std::memcpy(s, t, 16);
    }
    for (int i = 0; i < 16; ++i) s[i] ^= rk[16 * round + i];
  }
  std::memcpy(out, s, 16);
}

void decrypt_scalar(const std::uint8_t rk[176], const std::uint8_t in[16],
                    std::uint8_t out[16]) {
  std::uint8_t s[16];
  for (int i = 0; i < 16; ++i) s[i] = in[i] ^ rk[160 + i];

  for (int round = 9; round >= 0; --round) {
    std::uint8_t t[16];
    // InvShiftRows + InvSubBytes fused.
    for (int c = 0; c < 4; ++c) {
      t[4 * c + 0] = INV_SBOX[s[(4 * c + 0) % 16]];
      t[4 * c + 1] = INV_SBOX[s[(4 * c + 13) % 16]];
      t[4 * c + 2] = INV_SBOX[s[(4 * c + 10) % 16]];
      t[4 * c + 3] = INV_SBOX[s[(4 * c + 7) % 16]];
    }
    for (int i = 0; i < 16; ++i) t[i] ^= rk[16 * round + i];
    if (round > 0) {
      for (int c = 0; c < 4; ++c) {
        std::uint8_t a0 = t[4 * c], a1 = t[4 * c + 1], a2 = t[4 * c + 2],
                     a3 = t[4 * c + 3];
        s[4 * c + 0] = gmul(a0, 14) ^ gmul(a1, 11) ^ gmul(a2, 13) ^ gmul(a3, 9);
        s[4 * c + 1] = gmul(a0, 9) ^ gmul(a1, 14) ^ gmul(a2, 11) ^ gmul(a3, 13);
        s[4 * c + 2] = gmul(a0, 13) ^ gmul(a1, 9) ^ gmul(a2, 14) ^ gmul(a3, 11);
        s[4 * c + 3] = gmul(a0, 11) ^ gmul(a1, 13) ^ gmul(a2, 9) ^ gmul(a3, 14);
      }
    } else {
      std::memcpy(s, t, 16);
    }
  }
  std::memcpy(out, s, 16);
}

const bool g_hw = detail::cpu_has_aesni();

}  // namespace

bool aes128_hw_available() { return g_hw; }

Aes128::Aes128(const std::uint8_t key[KEY_SIZE]) : hw_(g_hw) {
  expand_key(key, enc_keys_);
  if (hw_) {
    detail::aesni_prepare_decrypt(enc_keys_, dec_keys_);
  } else {
    std::memset(dec_keys_, 0, sizeof(dec_keys_));
  }
}

void Aes128::encrypt_block(const std::uint8_t in[BLOCK_SIZE],
                           std::uint8_t out[BLOCK_SIZE]) const {
  if (hw_) {
    detail::aesni_encrypt_block(enc_keys_, in, out);
  } else {
    encrypt_scalar(enc_keys_, in, out);
  }
}

void Aes128::decrypt_block(const std::uint8_t in[BLOCK_SIZE],
                           std::uint8_t out[BLOCK_SIZE]) const {
  if (hw_) {
    detail::aesni_decrypt_block(dec_keys_, in, out);
  } else {
    decrypt_scalar(enc_keys_, in, out);
  }
}

void Aes128::cbc_encrypt(const std::uint8_t iv[BLOCK_SIZE],
                         const std::uint8_t* in, std::uint8_t* out,
                         std::size_t nblocks) const {
  if (hw_) {
    detail::aesni_cbc_encrypt(enc_keys_, iv, in, out, nblocks);
    return;
  }
  std::uint8_t chain[BLOCK_SIZE];
  std::memcpy(chain, iv, BLOCK_SIZE);
  for (std::size_t b = 0; b < nblocks; ++b) {
    std::uint8_t x[BLOCK_SIZE];
    for (int i = 0; i < 16; ++i) x[i] = in[16 * b + i] ^ chain[i];
    encrypt_scalar(enc_keys_, x, out + 16 * b);
    std::memcpy(chain, out + 16 * b, BLOCK_SIZE);
  }
}

void Aes128::cbc_decrypt(const std::uint8_t iv[BLOCK_SIZE],
                         const std::uint8_t* in, std::uint8_t* out,
                         std::size_t nblocks) const {
  if (hw_) {
    detail::aesni_cbc_decrypt(dec_keys_, iv, in, out, nblocks);
    return;
  }
  std::uint8_t chain[BLOCK_SIZE], next[BLOCK_SIZE];
  std::memcpy(chain, iv, BLOCK_SIZE);
  for (std::size_t b = 0; b < nblocks; ++b) {
    std::memcpy(next, in + 16 * b, BLOCK_SIZE);  // in may alias out
    decrypt_scalar(enc_keys_, next, out + 16 * b);
    for (int i = 0; i < 16; ++i) out[16 * b + i] ^= chain[i];
    std::memcpy(chain, next, BLOCK_SIZE);
  }
}

Bytes aes128_cbc_encrypt(const std::uint8_t key[16], const std::uint8_t iv[16],
                         ByteSpan plaintext) {
  // PKCS#7: always pad, a full extra block when already aligned.
  const std::size_t pad = 16 - plaintext.size() % 16;
  Bytes buf(plaintext.begin(), plaintext.end());
  buf.insert(buf.end(), pad, static_cast<std::uint8_t>(pad));

  Aes128 aes(key);
  aes.cbc_encrypt(iv, buf.data(), buf.data(), buf.size() / 16);
  return buf;
}

Result<Bytes> aes128_cbc_decrypt(const std::uint8_t key[16],
                                 const std::uint8_t iv[16],
                                 ByteSpan ciphertext) {
  if (ciphertext.empty() || ciphertext.size() % 16 != 0)
    return ErrorCode::BAD_ARGUMENT;

  Bytes buf(ciphertext.begin(), ciphertext.end());
  Aes128 aes(key);
  aes.cbc_decrypt(iv, buf.data(), buf.data(), buf.size() / 16);

  const std::uint8_t pad = buf.back();
  if (pad == 0 || pad > 16 || pad > buf.size()) return ErrorCode::BAD_PADDING;
  for (std::size_t i = buf.size() - pad; i < buf.size(); ++i) {
    if (buf[i] != pad) return ErrorCode::BAD_PADDING;
  }
  buf.resize(buf.size() - pad);
  return buf;
}

Bytes aes128_cbc_encrypt_nopad(const std::uint8_t key[16],
                               const std::uint8_t iv[16], ByteSpan plaintext) {
  Bytes buf(plaintext.begin(), plaintext.end());
  Aes128 aes(key);
  aes.cbc_encrypt(iv, buf.data(), buf.data(), buf.size() / 16);
  return buf;
}

Bytes aes128_cbc_decrypt_nopad(const std::uint8_t key[16],
                               const std::uint8_t iv[16], ByteSpan ciphertext) {
  Bytes buf(ciphertext.begin(), ciphertext.end());
  Aes128 aes(key);
  aes.cbc_decrypt(iv, buf.data(), buf.data(), buf.size() / 16);
  return buf;
}

}  // namespace microtee::crypto
