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
#include <map>
#include <vector>

#include "microtee/result.hpp"
#include "microtee/words.hpp"

namespace microtee {

// Simulated physical memory map. The secure world owns the lower region;
// the top 8 MiB is the REE-shared window used for SMC bulk payloads.
inline constexpr Addr PHYS_SIZE = 32u * 1024 * 1024;
inline constexpr Addr SHARED_POOL_BASE = 24u * 1024 * 1024;
inline constexpr Addr SHARED_VA_BASE = 0x8000'0000u;

inline constexpr Addr page_floor(Addr a) { return a & ~Addr(PAGE_SIZE - 1); }
inline constexpr Addr page_ceil(Addr a) {
  return (a + PAGE_SIZE - 1) & ~Addr(PAGE_SIZE - 1);
}

// Flat byte-addressable physical memory.
class PhysicalMemory {
 public:
  PhysicalMemory() : bytes_(PHYS_SIZE, 0) {}

  std::uint8_t read8(Addr pa) const { return bytes_[pa]; }
  void write8(Addr pa, std::uint8_t v) { bytes_[pa] = v; }

  Word read32(Addr pa) const { return get_le32(&bytes_[pa]); }
  void write32(Addr pa, Word v) {
    bytes_[pa] = static_cast<std::uint8_t>(v);
    bytes_[pa + 1] = static_cast<std::uint8_t>(v >> 8);
    bytes_[pa + 2] = static_cast<std::uint8_t>(v >> 16);
    bytes_[pa + 3] = static_cast<std::uint8_t>(v >> 24);
  }

  std::uint8_t* data(Addr pa) { return bytes_.data() + pa; }
  const std::uint8_t* data(Addr pa) const { return bytes_.data() + pa; }

  void zero(Addr pa, std::size_t len);

 private:
  std::vector<std::uint8_t> bytes_;
};

enum class Perm : std::uint8_t {
  NONE = 0,
  R = 1,
  W = 2,
  RW = 3,
};

inline bool perm_allows(Perm have, Perm want) {
  return (static_cast<std::uint8_t>(have) & static_cast<std::uint8_t>(want)) ==
         static_cast<std::uint8_t>(want);
}

struct PageMapping {
  Addr frame;  // physical page base
  Perm perms;
  bool shared;  // part of an explicitly shared buffer
};

// Per-task virtual address space: page granular, software-walked.
class VSpace {
 public:
  // Fails with FAULT when the virtual page is already mapped.
  Status map_page(Addr vpage, Addr frame, Perm perms, bool shared = false);
  Status unmap_page(Addr vpage);

  // Walks the page table for one access. FAULT on unmapped page or
  // insufficient permission.
  Result<Addr> translate(Addr va, Perm want) const;

  // Translates a byte range that must lie within one contiguous mapped
  // run of pages with the needed permission.
  Result<Addr> translate_range(Addr va, std::size_t len, Perm want) const;

  bool maps_range(Addr va, std::size_t len, Perm want) const {
    return len > 0 && translate_range(va, len, want).ok();
  }

  const std::map<Addr, PageMapping>& pages() const { return pages_; }

 private:
  std::map<Addr, PageMapping> pages_;
};

// A region handed over for retyping. Allocation advances the watermark;
// reclaimed regions go to a free list that is searched first.
class UntypedMemory {
 public:
  UntypedMemory(Addr base, Addr size) : base_(base), size_(size) {}

  Result<Addr> alloc(Addr len);
  void reclaim(Addr base, Addr len);

  Addr base() const { return base_; }
  Addr size() const { return size_; }
  Addr watermark() const { return watermark_; }
  Addr free_bytes() const;

  bool contains(Addr pa, Addr len) const {
    return pa >= base_ && pa + len <= base_ + size_ && pa + len >= pa;
  }

 private:
  Addr base_;
  Addr size_;
  Addr watermark_ = 0;
  std::vector<std::pair<Addr, Addr>> free_list_;  // {base, len}, page multiples
};

}  // namespace microtee
