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
#include <string>
#include <vector>

#include "microtee/words.hpp"

namespace microtee {

// Structured event log shared by the monitor, kernel, root task and
// services. Tests assert on event order; the CLI can dump it for humans.
enum class EventKind : std::uint8_t {
  // Two-world switching.
  SMC_ENTER,        // a = command id, b = args word
  SMC_EXIT,         // a = result word
  CTX_SAVE,         // a = world (0 normal, 1 secure)
  CTX_RESTORE,      // a = world
  IRQ_RAISE,        // a = irq line
  IRQ_DELIVER,      // a = irq line, b = tcb
  IRQ_ACK,          // a = irq line

  // Root task dispatch.
  ROOT_DISPATCH,    // a = command id, b = args word
  ROOT_SEND,        // a = ta tcb, b = words sent
  ROOT_RECV,        // a = ta tcb, b = words received
  ROOT_IGNORED,     // a = command id
  ROOT_RETURN,      // a = result word

  // Kernel IPC.
  IPC_SEND,         // a = sender tcb, b = receiver tcb
  IPC_RECV,         // a = receiver tcb, b = sender tcb
  IPC_BLOCK,        // a = tcb
  IPC_ABORT,        // a = tcb

  // Trusted application lifecycle.
  TA_START,         // a = tcb
  TA_RECV,          // a = tcb, b = first word
  TA_COMPUTE,       // a = tcb
  TA_REPLY,         // a = tcb, b = first word
  TA_FAULT,         // a = tcb, b = fault code
  TA_DESTROY,       // a = tcb

  // Security services.
  SVC_REQUEST,      // a = service id, b = client tcb
  SVC_REPLY,        // a = service id, b = status

  // Secure boot.
  BOOT_STAGE_OK,    // a = stage tag
  BOOT_STAGE_FAIL,  // a = stage tag, b = error code
};

const char* event_kind_name(EventKind k);

struct Event {
  EventKind kind;
  Word a = 0;
  Word b = 0;
};

class EventTrace {
 public:
  void emit(EventKind kind, Word a = 0, Word b = 0) {
    if (enabled_) events_.push_back(Event{kind, a, b});
  }

  const std::vector<Event>& events() const { return events_; }
  void clear() { events_.clear(); }
  void set_enabled(bool on) { enabled_ = on; }
  bool enabled() const { return enabled_; }

  // Number of events of one kind, optionally filtered on field a.
  std::size_t count(EventKind kind) const;
  std::size_t count(EventKind kind, Word a) const;

  // Index of the first event of this kind at or after `from`, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(EventKind kind, std::size_t from = 0) const;

  // One line per event, for the CLI trace dump.
  std::vector<std::string> render() const;

 private:
  std::vector<Event> events_;
  bool enabled_ = true;
};

}  // namespace microtee
