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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "microtee/result.hpp"
#include "microtee/trace.hpp"
#include "microtee/words.hpp"

namespace microtee {

enum class WorldTag : std::uint8_t { SECURE = 0, NORMAL = 1 };

struct WorldContext {
  std::array<Word, 16> register_file{};
  Addr stack_pointer = 0;
  Addr program_counter = 0;
  Word status_flags = 0;
  WorldTag world = WorldTag::SECURE;

  bool operator==(const WorldContext&) const = default;
};

struct SmcRequest {
  Word command_id = 0;
  Word args = 0;
};

using SavedSlot = std::uint32_t;

// Monitor-mode state machine. Exactly one world executes at any instant;
// the NS bit tracks which. An SMC trap saves the executing world's context
// on the monitor stack, flips NS, restores the other world's context and
// deposits (command_id, args) in its first two registers.
class Monitor {
 public:
  explicit Monitor(EventTrace& trace);

  // Seeds a world's saved context; until then traps into it fail.
  void init_world(WorldTag world, const WorldContext& ctx);
  bool world_initialized(WorldTag world) const;

  // Trap from the currently executing world. On success the other world is
  // executing and its context is returned. Increments switch_counter by 2.
  Result<const WorldContext*> smc_trap(const SmcRequest& req);

  bool ns_bit() const { return ns_bit_; }
  std::uint64_t switch_counter() const { return switch_counter_; }

  WorldContext& executing_context() { return executing_; }
  const WorldContext& executing_context() const { return executing_; }

  // Context stack primitives; each successful call counts one save or one
  // restore toward switch_counter.
  SavedSlot save_context(const WorldContext& ctx);
  Result<WorldContext> restore_context(SavedSlot slot);

  // Shared-buffer handle table. The normal world registers a buffer and
  // passes the returned handle (high bit set) through the args register;
  // the secure world resolves it before touching the memory.
  Word register_buffer(Bytes data);
  Result<Bytes*> resolve_handle(Word handle);
  void release_handle(Word handle);

 private:
  EventTrace& trace_;
  bool ns_bit_ = true;  // the normal world runs first (REE stub drives)
  WorldContext executing_;
  std::optional<WorldContext> saved_[2];  // indexed by WorldTag
  std::vector<std::optional<WorldContext>> stack_;
  std::uint64_t switch_counter_ = 0;
  std::map<Word, Bytes> buffers_;
  Word next_handle_ = 1;
};

}  // namespace microtee
