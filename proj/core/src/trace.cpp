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

#include "microtee/trace.hpp"

#include <fmt/core.h>

namespace microtee {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::SMC_ENTER: return "SMC_ENTER";
    case EventKind::SMC_EXIT: return "SMC_EXIT";
    case EventKind::CTX_SAVE: return "CTX_SAVE";
    case EventKind::CTX_RESTORE: return "CTX_RESTORE";
    case EventKind::IRQ_RAISE: return "IRQ_RAISE";
    case EventKind::IRQ_DELIVER: return "IRQ_DELIVER";
    case EventKind::IRQ_ACK: return "IRQ_ACK";
    case EventKind::ROOT_DISPATCH: return "ROOT_DISPATCH";
    case EventKind::ROOT_SEND: return "ROOT_SEND";
    case EventKind::ROOT_RECV: return "ROOT_RECV";
    case EventKind::ROOT_IGNORED: return "ROOT_IGNORED";
    case EventKind::ROOT_RETURN: return "ROOT_RETURN";
    case EventKind::IPC_SEND: return "IPC_SEND";
    case EventKind::IPC_RECV: return "IPC_RECV";
    case EventKind::IPC_BLOCK: return "IPC_BLOCK";
    case EventKind::IPC_ABORT: return "IPC_ABORT";
    case EventKind::TA_START: return "TA_START";
    case EventKind::TA_RECV: return "TA_RECV";
    case EventKind::TA_COMPUTE: return "TA_COMPUTE";
    case EventKind::TA_REPLY: return "TA_REPLY";
    case EventKind::TA_FAULT: return "TA_FAULT";
    case EventKind::TA_DESTROY: return "TA_DESTROY";
    case EventKind::SVC_REQUEST: return "SVC_REQUEST";
    case EventKind::SVC_REPLY: return "SVC_REPLY";
    case EventKind::BOOT_STAGE_OK: return "BOOT_STAGE_OK";
    case EventKind::BOOT_STAGE_FAIL: return "BOOT_STAGE_FAIL";
  }
  return "UNKNOWN";
}

std::size_t EventTrace::count(EventKind kind) const {
  std::size_t n = 0;
  for (const Event& e : events_) {
    if (e.kind == kind) ++n;
  }
  return n;
}

std::size_t EventTrace::count(EventKind kind, Word a) const {
  std::size_t n = 0;
  for (const Event& e : events_) {
    if (e.kind == kind && e.a == a) ++n;
  }
  return n;
}

std::size_t EventTrace::find(EventKind kind, std::size_t from) const {
  for (std::size_t i = from; i < events_.size(); ++i) {
    if (events_[i].kind == kind) return i;
  }
  return npos;
}

std::vector<std::string> EventTrace::render() const {
  std::vector<std::string> lines;
  lines.reserve(events_.size());
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    lines.push_back(fmt::format("[{:4}] {:<16} a=0x{:08x} b=0x{:08x}", i,
                                event_kind_name(e.kind), e.a, e.b));
  }
  return lines;
}

}  // namespace microtee
