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

#include "microtee/monitor.hpp"

namespace microtee {

Monitor::Monitor(EventTrace& trace) : trace_(trace) {}

void Monitor::init_world(WorldTag world, const WorldContext& ctx) {
  WorldContext c = ctx;
  c.world = world;
  saved_[static_cast<int>(world)] = c;
  if ((world == WorldTag::NORMAL) == ns_bit_) {
    executing_ = c;
  }
}

bool Monitor::world_initialized(WorldTag world) const {
  return saved_[static_cast<int>(world)].has_value();
}

Result<const WorldContext*> Monitor::smc_trap(const SmcRequest& req) {
  WorldTag cur = ns_bit_ ? WorldTag::NORMAL : WorldTag::SECURE;
  WorldTag other = ns_bit_ ? WorldTag::SECURE : WorldTag::NORMAL;
  auto& dest = saved_[static_cast<int>(other)];
  if (!dest.has_value()) {
    return ErrorCode::NO_SAVED_CONTEXT;  // nothing to resume; no state change
  }

  trace_.emit(cur == WorldTag::NORMAL ? EventKind::SMC_ENTER
                                      : EventKind::SMC_EXIT,
              req.command_id, req.args);

  // Save the executing world on the monitor stack.
  executing_.world = cur;
  saved_[static_cast<int>(cur)] = executing_;
  switch_counter_++;
  trace_.emit(EventKind::CTX_SAVE, static_cast<Word>(cur), 0);

  // Flip NS and restore the destination world.
  ns_bit_ = (other == WorldTag::NORMAL);
  executing_ = *dest;
  switch_counter_++;
  trace_.emit(EventKind::CTX_RESTORE, static_cast<Word>(other), 0);

  // Parameters ride in the first two registers of the resumed world.
  executing_.register_file[0] = req.command_id;
  executing_.register_file[1] = req.args;
  return &executing_;
}

SavedSlot Monitor::save_context(const WorldContext& ctx) {
  stack_.push_back(ctx);
  switch_counter_++;
  trace_.emit(EventKind::CTX_SAVE, static_cast<Word>(ctx.world), 1);
  return static_cast<SavedSlot>(stack_.size() - 1);
}

Result<WorldContext> Monitor::restore_context(SavedSlot slot) {
  if (slot >= stack_.size() || !stack_[slot].has_value()) {
    return ErrorCode::EMPTY_SLOT;
  }
  WorldContext ctx = *stack_[slot];
  stack_[slot].reset();  // a slot restores at most once
  switch_counter_++;
  trace_.emit(EventKind::CTX_RESTORE, static_cast<Word>(ctx.world), 1);
  return ctx;
}

Word Monitor::register_buffer(Bytes data) {
  Word handle = next_handle_++ | SHARED_HANDLE_FLAG;
  buffers_[handle] = std::move(data);
  return handle;
}

Result<Bytes*> Monitor::resolve_handle(Word handle) {
  if ((handle & SHARED_HANDLE_FLAG) == 0) return ErrorCode::EMPTY_SLOT;
  auto it = buffers_.find(handle);
  if (it == buffers_.end()) return ErrorCode::EMPTY_SLOT;
  return &it->second;
}

void Monitor::release_handle(Word handle) { buffers_.erase(handle); }

}  // namespace microtee
