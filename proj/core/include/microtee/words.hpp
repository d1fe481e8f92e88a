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
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace microtee {

// The simulated machine is a 32-bit ARM-style target: one word is 32 bits
// and all addresses fit in a word.
using Word = std::uint32_t;
using Addr = std::uint32_t;
using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

inline constexpr std::size_t MAX_MSG_WORDS = 64;
inline constexpr std::size_t PAGE_SIZE = 4096;

// Reserved status words returned to the normal world. These sit at the top
// of the word range so ordinary TA results never collide with them in
// practice (a TA can still legitimately produce them; the single-word
// return channel cannot distinguish that case).
inline constexpr Word STATUS_IGNORED = 0xFFFF'FFFFu;
inline constexpr Word STATUS_TA_FAULTED = 0xFFFF'FFFEu;
inline constexpr Word STATUS_BAD_HANDLE = 0xFFFF'FFFDu;

// High bit of the SMC args word marks it as a shared-buffer handle.
inline constexpr Word SHARED_HANDLE_FLAG = 0x8000'0000u;

inline void put_be32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline std::uint32_t get_be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

inline void put_le32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

inline std::uint32_t get_le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) |
         (std::uint32_t{p[2]} << 16) | (std::uint32_t{p[3]} << 24);
}

inline std::string to_hex(ByteSpan data) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

// Packs bytes into words little-endian, zero padding the tail.
inline std::vector<Word> bytes_to_words(ByteSpan data) {
  std::vector<Word> words((data.size() + 3) / 4, 0);
  if (!data.empty()) std::memcpy(words.data(), data.data(), data.size());
  return words;
}

inline Bytes words_to_bytes(std::span<const Word> words, std::size_t nbytes) {
  Bytes out(nbytes);
  if (nbytes) std::memcpy(out.data(), words.data(), nbytes);
  return out;
}

// True if needle occurs as a contiguous byte substring of haystack.
inline bool contains_bytes(ByteSpan haystack, ByteSpan needle) {
  if (needle.empty() || haystack.size() < needle.size()) return false;
  const auto* end = haystack.data() + haystack.size() - needle.size() + 1;
  for (const auto* p = haystack.data(); p != end; ++p) {
    if (std::memcmp(p, needle.data(), needle.size()) == 0) return true;
  }
  return false;
}

}  // namespace microtee
