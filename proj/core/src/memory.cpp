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

#include "microtee/memory.hpp"

#include <algorithm>
#include <cstring>

namespace microtee {

void PhysicalMemory::zero(Addr pa, std::size_t len) {
  std::memset(bytes_.data() + pa, 0, len);
}

Status VSpace::map_page(Addr vpage, Addr frame, Perm perms, bool shared) {
  if (vpage % PAGE_SIZE || frame % PAGE_SIZE || perms == Perm::NONE)
    return ErrorCode::FAULT;
  auto [it, inserted] = pages_.emplace(vpage, PageMapping{frame, perms, shared});
  (void)it;
  return inserted ? Status() : Status(ErrorCode::FAULT);
}

Status VSpace::unmap_page(Addr vpage) {
  return pages_.erase(vpage) ? Status() : Status(ErrorCode::FAULT);
}

Result<Addr> VSpace::translate(Addr va, Perm want) const {
  auto it = pages_.find(page_floor(va));
  if (it == pages_.end()) return ErrorCode::FAULT;
  if (!perm_allows(it->second.perms, want)) return ErrorCode::FAULT;
  return it->second.frame + (va - it->first);
}

Result<Addr> VSpace::translate_range(Addr va, std::size_t len, Perm want) const {
  if (len == 0 || va + len < va) return ErrorCode::FAULT;
  Result<Addr> first = translate(va, want);
  if (!first.ok()) return first;

  // Every following page must be mapped physically contiguous with the
  // first so callers can use the range as one span.
  Addr expect = page_floor(*first) + PAGE_SIZE;
  for (Addr vp = page_floor(va) + PAGE_SIZE; vp < va + len; vp += PAGE_SIZE) {
    Result<Addr> pa = translate(vp, want);
    if (!pa.ok()) return pa;
    if (*pa != expect) return ErrorCode::FAULT;
    expect += PAGE_SIZE;
  }
  return first;
}

Result<Addr> UntypedMemory::alloc(Addr len) {
  if (len == 0) return ErrorCode::OUT_OF_MEMORY;
  len = page_ceil(len);

  // Prefer reclaimed space, first fit.
  for (auto it = free_list_.begin(); it != free_list_.end(); ++it) {
    if (it->second >= len) {
      Addr got = it->first;
      it->first += len;
      it->second -= len;
      if (it->second == 0) free_list_.erase(it);
      return got;
    }
  }

  if (size_ - watermark_ < len) return ErrorCode::OUT_OF_MEMORY;
  Addr got = base_ + watermark_;
  watermark_ += len;
  return got;
}

void UntypedMemory::reclaim(Addr base, Addr len) {
  len = page_ceil(len);
  free_list_.emplace_back(base, len);

  // Coalesce adjacent runs so reclaimed memory stays usable for larger
  // objects.
  std::sort(free_list_.begin(), free_list_.end());
  std::vector<std::pair<Addr, Addr>> merged;
  for (auto [b, l] : free_list_) {
    if (!merged.empty() && merged.back().first + merged.back().second == b) {
      merged.back().second += l;
    } else {
      merged.emplace_back(b, l);
    }
  }
  free_list_ = std::move(merged);
}

Addr UntypedMemory::free_bytes() const {
  Addr total = size_ - watermark_;
  for (auto [b, l] : free_list_) {
    (void)b;
    total += l;
  }
  return total;
}

}  // namespace microtee
