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
#include <deque>
#include <optional>
#include <vector>

#include "microtee/memory.hpp"
#include "microtee/result.hpp"
#include "microtee/words.hpp"

namespace microtee {

// Kernel objects live in a flat table; references carry a generation so a
// reference to a destroyed object is detectable instead of aliasing its
// reused slot.
struct ObjectRef {
  std::uint32_t index = 0;
  std::uint32_t generation = 0;

  bool operator==(const ObjectRef&) const = default;
};

inline constexpr ObjectRef NULL_REF{~0u, 0};

using TcbRef = ObjectRef;
using EndpointRef = ObjectRef;

enum class Right : std::uint8_t {
  SEND = 1 << 0,
  RECV = 1 << 1,
  GRANT = 1 << 2,
  READ = 1 << 3,
  WRITE = 1 << 4,
};

class Rights {
 public:
  constexpr Rights() = default;
  constexpr Rights(std::initializer_list<Right> rs) {
    for (Right r : rs) bits_ |= static_cast<std::uint8_t>(r);
  }

  constexpr bool has(Right r) const {
    return bits_ & static_cast<std::uint8_t>(r);
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(Rights other) const {
    return (bits_ & other.bits_) == bits_;
  }

  constexpr Rights minus(Right r) const {
    Rights out = *this;
    out.bits_ &= static_cast<std::uint8_t>(~static_cast<std::uint8_t>(r));
    return out;
  }
  constexpr Rights plus(Right r) const {
    Rights out = *this;
    out.bits_ |= static_cast<std::uint8_t>(r);
    return out;
  }
  constexpr Rights intersect(Rights other) const {
    Rights out;
    out.bits_ = bits_ & other.bits_;
    return out;
  }

  constexpr bool operator==(const Rights&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr Rights FULL_ENDPOINT_RIGHTS{Right::SEND, Right::RECV,
                                             Right::GRANT};

struct Capability {
  ObjectRef object;
  Rights rights;
  Word badge = 0;
};

// Index into a TCB's cspace.
using CapSlot = std::uint32_t;
inline constexpr CapSlot NULL_SLOT = ~0u;

struct SharedBufDesc {
  Addr base = 0;   // virtual address, same in both parties' vspaces
  Word len = 0;    // bytes
};

struct Message {
  Word label = 0;
  std::vector<Word> words;
  std::optional<SharedBufDesc> shared_buf;
  Word badge = 0;             // filled by the kernel on delivery
  bool expects_reply = false; // set by ipc_call; tells a server to reply
};

enum class TaskState : std::uint8_t {
  INACTIVE,
  RUNNABLE,
  BLOCKED_SEND,
  BLOCKED_RECV,
};

const char* task_state_name(TaskState s);

struct TcbRecord {
  Word ta_id = 0;
  std::array<Word, 16> register_file{};
  Addr stack_pointer = 0;
  Addr program_counter = 0;
  int priority = 0;
  std::vector<Capability> cspace;
  std::uint32_t vspace_id = 0;
  TaskState state = TaskState::INACTIVE;

  // Simulation bookkeeping, not architectural state.
  Addr ipc_buf_va = 0;            // mapped page the kernel copies through
  Addr tcb_frame = 0;             // backing frame for the TCB object
  Word fault_code = 0;
  bool faulted = false;

  // Rendezvous state.
  std::optional<Message> pending_recv;   // delivered message, not yet taken
  std::optional<Message> staged_send;    // message parked while blocked
  Word staged_badge = 0;                 // badge of the cap used for the send
  EndpointRef blocked_on = NULL_REF;
  TcbRef reply_to = NULL_REF;            // caller awaiting our reply
  bool waiting_reply = false;            // blocked_recv for a call reply
  bool in_run_queue = false;             // scheduler bookkeeping
};

struct EndpointObject {
  std::deque<TcbRef> send_queue;
  std::deque<TcbRef> recv_queue;
  Addr frame = 0;  // backing frame
};

// Flat object table with generation counters.
class ObjectTable {
 public:
  TcbRef add_tcb(TcbRecord rec);
  EndpointRef add_endpoint(EndpointObject ep);

  TcbRecord* tcb(TcbRef ref);
  const TcbRecord* tcb(TcbRef ref) const;
  EndpointObject* endpoint(EndpointRef ref);

  // Invalidates the reference; later lookups fail.
  Status remove(ObjectRef ref);

  bool is_endpoint(ObjectRef ref) const;

  // Live TCB refs in creation order, for scans.
  std::vector<TcbRef> live_tcbs() const;

 private:
  struct Slot {
    std::uint32_t generation = 0;
    bool live = false;
    bool is_tcb = false;
    std::optional<TcbRecord> tcb;
    std::optional<EndpointObject> endpoint;
  };

  ObjectRef add_slot(Slot s);
  Slot* resolve(ObjectRef ref);
  const Slot* resolve(ObjectRef ref) const;

  std::vector<Slot> slots_;
};

}  // namespace microtee
