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

#include "microtee/objects.hpp"

namespace microtee {

const char* task_state_name(TaskState s) {
  switch (s) {
    case TaskState::INACTIVE: return "inactive";
    case TaskState::RUNNABLE: return "runnable";
    case TaskState::BLOCKED_SEND: return "blocked_send";
    case TaskState::BLOCKED_RECV: return "blocked_recv";
  }
  return "?";
}

ObjectRef ObjectTable::add_slot(Slot s) {
  // Reuse a dead slot if one exists; its generation was already bumped at
  // removal so stale refs cannot match.
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (!slots_[i].live) {
      std::uint32_t gen = slots_[i].generation;
      s.generation = gen;
      s.live = true;
      slots_[i] = std::move(s);
      return ObjectRef{i, gen};
    }
  }
  s.generation = 0;
  s.live = true;
  slots_.push_back(std::move(s));
  return ObjectRef{static_cast<std::uint32_t>(slots_.size() - 1), 0};
}

TcbRef ObjectTable::add_tcb(TcbRecord rec) {
  Slot s;
  s.is_tcb = true;
  s.tcb = std::move(rec);
  return add_slot(std::move(s));
}

EndpointRef ObjectTable::add_endpoint(EndpointObject ep) {
  Slot s;
  s.is_tcb = false;
  s.endpoint = std::move(ep);
  return add_slot(std::move(s));
}

ObjectTable::Slot* ObjectTable::resolve(ObjectRef ref) {
  if (ref.index >= slots_.size()) return nullptr;
  Slot& s = slots_[ref.index];
  if (!s.live || s.generation != ref.generation) return nullptr;
  return &s;
}

const ObjectTable::Slot* ObjectTable::resolve(ObjectRef ref) const {
  if (ref.index >= slots_.size()) return nullptr;
  const Slot& s = slots_[ref.index];
  if (!s.live || s.generation != ref.generation) return nullptr;
  return &s;
}

TcbRecord* ObjectTable::tcb(TcbRef ref) {
  Slot* s = resolve(ref);
  if (!s || !s->is_tcb) return nullptr;
  return &*s->tcb;
}

const TcbRecord* ObjectTable::tcb(TcbRef ref) const {
  const Slot* s = resolve(ref);
  if (!s || !s->is_tcb) return nullptr;
  return &*s->tcb;
}

EndpointObject* ObjectTable::endpoint(EndpointRef ref) {
  Slot* s = resolve(ref);
  if (!s || s->is_tcb) return nullptr;
  return &*s->endpoint;
}

Status ObjectTable::remove(ObjectRef ref) {
  Slot* s = resolve(ref);
  if (!s) return Status(ErrorCode::INVALID_TCB);
  s->live = false;
  s->generation++;
  s->tcb.reset();
  s->endpoint.reset();
  return Status();
}

bool ObjectTable::is_endpoint(ObjectRef ref) const {
  const Slot* s = resolve(ref);
  return s != nullptr && !s->is_tcb;
}

std::vector<TcbRef> ObjectTable::live_tcbs() const {
  std::vector<TcbRef> out;
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].live && slots_[i].is_tcb) {
      out.push_back(TcbRef{i, slots_[i].generation});
    }
  }
  return out;
}

}  // namespace microtee
