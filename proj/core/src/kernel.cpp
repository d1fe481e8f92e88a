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

#include "microtee/kernel.hpp"

#include <algorithm>
#include <set>

namespace microtee {
namespace {

// Marshalled IPC frame layout, word offsets within the IPC buffer.
constexpr Addr OFF_LABEL = 0;
constexpr Addr OFF_COUNT = 4;
constexpr Addr OFF_FLAGS = 8;
constexpr Addr OFF_SHARED_BASE = 12;
constexpr Addr OFF_SHARED_LEN = 16;
constexpr Addr OFF_PAYLOAD = 20;

constexpr Word FLAG_SHARED = 1u << 0;
constexpr Word FLAG_CALL = 1u << 1;

constexpr Word FAULT_BAD_READ = 1;
constexpr Word FAULT_BAD_WRITE = 2;
constexpr Word FAULT_IPC_BUF = 3;

}  // namespace

Kernel::Kernel(PhysicalMemory& phys, EventTrace& trace)
    : phys_(phys), trace_(trace) {}

std::uint32_t Kernel::create_vspace() {
  vspaces_.emplace_back();
  return static_cast<std::uint32_t>(vspaces_.size() - 1);
}

VSpace* Kernel::vspace(std::uint32_t id) {
  if (id >= vspaces_.size()) return nullptr;
  return &vspaces_[id];
}

Result<Addr> Kernel::alloc_frames(UntypedMemory& ut, std::size_t bytes) {
  auto base = ut.alloc(bytes);
  if (!base.ok()) return base.error();
  std::size_t len = page_ceil(bytes);
  // Retyping hands out zeroed memory even if the region was reclaimed.
  phys_.zero(*base, len);
  for (Addr f = *base; f < *base + len; f += PAGE_SIZE) frame_owner_[f] = &ut;
  return *base;
}

Status Kernel::map_range(std::uint32_t vspace_id, Addr va, Addr pa,
                         std::size_t len, Perm perms, bool shared) {
  VSpace* vs = vspace(vspace_id);
  if (!vs) return Status(ErrorCode::BAD_ARGUMENT);
  if ((va | pa) % PAGE_SIZE != 0) return Status(ErrorCode::BAD_ARGUMENT);
  len = page_ceil(len);
  bool writable = perm_allows(perms, Perm::W);
  for (std::size_t off = 0; off < len; off += PAGE_SIZE) {
    Addr frame = pa + off;
    if (writable) {
      // A frame may be writable in two vspaces only as a shared buffer.
      for (std::uint32_t vid = 0; vid < vspaces_.size(); ++vid) {
        if (vid == vspace_id) continue;
        for (const auto& [ova, m] : vspaces_[vid].pages()) {
          if (m.frame == frame && perm_allows(m.perms, Perm::W) &&
              !(shared && m.shared)) {
            return Status(ErrorCode::BAD_ARGUMENT);
          }
        }
      }
    }
    Status st = vs->map_page(va + off, frame, perms, shared);
    if (!st.ok()) return st;
  }
  return Status();
}

Result<TcbRef> Kernel::create_tcb(UntypedMemory& ut, int priority,
                                  std::uint32_t vspace_id, Word ta_id) {
  if (priority < 0 || priority > 255) {
    return ErrorCode::INVALID_PRIORITY;
  }
  VSpace* vs = vspace(vspace_id);
  if (!vs) return ErrorCode::BAD_ARGUMENT;

  auto tcb_frame = alloc_frames(ut, TCB_SIZE);
  if (!tcb_frame.ok()) return tcb_frame.error();

  auto buf_frame = alloc_frames(ut, PAGE_SIZE);
  if (!buf_frame.ok()) {
    ut.reclaim(*tcb_frame, TCB_SIZE);
    return buf_frame.error();
  }

  Addr buf_va = IPC_BUF_VA;
  while (vs->pages().count(buf_va) != 0) buf_va += PAGE_SIZE;
  Status st = map_range(vspace_id, buf_va, *buf_frame, PAGE_SIZE, Perm::RW);
  if (!st.ok()) return st.error();

  TcbRecord rec;
  rec.ta_id = ta_id;
  rec.priority = priority;
  rec.vspace_id = vspace_id;
  rec.state = TaskState::INACTIVE;
  rec.tcb_frame = *tcb_frame;
  rec.ipc_buf_va = buf_va;
  return objects_.add_tcb(std::move(rec));
}

Result<CapSlot> Kernel::create_endpoint(UntypedMemory& ut, TcbRef owner) {
  TcbRecord* o = objects_.tcb(owner);
  if (!o) return ErrorCode::INVALID_TCB;
  auto frame = alloc_frames(ut, ENDPOINT_SIZE);
  if (!frame.ok()) return frame.error();
  EndpointObject ep;
  ep.frame = *frame;
  EndpointRef ref = objects_.add_endpoint(std::move(ep));
  return install_cap(owner, Capability{ref, FULL_ENDPOINT_RIGHTS, 0});
}

Result<Capability> Kernel::lookup_cap(TcbRef tcb_ref, CapSlot slot) {
  TcbRecord* t = objects_.tcb(tcb_ref);
  if (!t) return ErrorCode::CAP_MISSING;
  if (slot >= t->cspace.size()) return ErrorCode::CAP_MISSING;
  Capability cap = t->cspace[slot];
  if (!objects_.is_endpoint(cap.object)) return ErrorCode::CAP_MISSING;
  return cap;
}

Result<CapSlot> Kernel::install_cap(TcbRef tcb_ref, Capability cap) {
  TcbRecord* t = objects_.tcb(tcb_ref);
  if (!t) return ErrorCode::INVALID_TCB;
  t->cspace.push_back(cap);
  return static_cast<CapSlot>(t->cspace.size() - 1);
}

Result<CapSlot> Kernel::derive_capability(TcbRef tcb_ref, CapSlot slot,
                                          Rights keep, Word badge) {
  auto cap = lookup_cap(tcb_ref, slot);
  if (!cap.ok()) return cap.error();
  if (keep.empty() || !keep.subset_of(cap->rights)) {
    return ErrorCode::BAD_ARGUMENT;  // rights may never be amplified
  }
  return install_cap(tcb_ref, Capability{cap->object, keep, badge});
}

Result<CapSlot> Kernel::grant_capability(TcbRef from, CapSlot slot, TcbRef to,
                                         bool keep_grant) {
  auto cap = lookup_cap(from, slot);
  if (!cap.ok()) return cap.error();
  if (!cap->rights.has(Right::GRANT)) return ErrorCode::NO_GRANT_RIGHT;
  Capability installed = *cap;
  if (!keep_grant) installed.rights = installed.rights.minus(Right::GRANT);
  return install_cap(to, installed);
}

Status Kernel::marshal(TcbRecord* t, const Message& msg) {
  VSpace* vs = vspace(t->vspace_id);
  auto w32 = [&](Addr off, Word v) -> bool {
    auto pa = vs->translate(t->ipc_buf_va + off, Perm::W);
    if (!pa.ok()) return false;
    phys_.write32(*pa, v);
    return true;
  };
  Word flags = 0;
  if (msg.shared_buf) flags |= FLAG_SHARED;
  if (msg.expects_reply) flags |= FLAG_CALL;
  bool ok = w32(OFF_LABEL, msg.label) &&
            w32(OFF_COUNT, static_cast<Word>(msg.words.size())) &&
            w32(OFF_FLAGS, flags) &&
            w32(OFF_SHARED_BASE, msg.shared_buf ? msg.shared_buf->base : 0) &&
            w32(OFF_SHARED_LEN, msg.shared_buf ? msg.shared_buf->len : 0);
  for (std::size_t i = 0; ok && i < msg.words.size(); ++i) {
    ok = w32(OFF_PAYLOAD + 4 * i, msg.words[i]);
  }
  if (!ok) return Status(ErrorCode::FAULT);
  return Status();
}

Status Kernel::transfer(TcbRecord* from, TcbRecord* to) {
  VSpace* sv = vspace(from->vspace_id);
  VSpace* rv = vspace(to->vspace_id);
  auto count_pa = sv->translate(from->ipc_buf_va + OFF_COUNT, Perm::R);
  if (!count_pa.ok()) return Status(ErrorCode::FAULT);
  Word n = phys_.read32(*count_pa);
  if (n > MAX_MSG_WORDS) return Status(ErrorCode::FAULT);
  std::size_t total = OFF_PAYLOAD / 4 + n;
  // Word-by-word copy; every word is translated through both address
  // spaces, which is what makes transfer cost scale with message length.
  for (std::size_t i = 0; i < total; ++i) {
    auto spa = sv->translate(from->ipc_buf_va + 4 * i, Perm::R);
    auto dpa = rv->translate(to->ipc_buf_va + 4 * i, Perm::W);
    if (!spa.ok() || !dpa.ok()) return Status(ErrorCode::FAULT);
    phys_.write32(*dpa, phys_.read32(*spa));
  }
  return Status();
}

Result<Message> Kernel::unmarshal(TcbRecord* t) {
  VSpace* vs = vspace(t->vspace_id);
  auto r32 = [&](Addr off) -> Result<Word> {
    auto pa = vs->translate(t->ipc_buf_va + off, Perm::R);
    if (!pa.ok()) return pa.error();
    return phys_.read32(*pa);
  };
  Message msg;
  auto label = r32(OFF_LABEL);
  auto count = r32(OFF_COUNT);
  auto flags = r32(OFF_FLAGS);
  if (!label.ok() || !count.ok() || !flags.ok()) return ErrorCode::FAULT;
  msg.label = *label;
  if (*count > MAX_MSG_WORDS) return ErrorCode::FAULT;
  msg.expects_reply = (*flags & FLAG_CALL) != 0;
  if (*flags & FLAG_SHARED) {
    auto base = r32(OFF_SHARED_BASE);
    auto len = r32(OFF_SHARED_LEN);
    if (!base.ok() || !len.ok()) return ErrorCode::FAULT;
    msg.shared_buf = SharedBufDesc{*base, *len};
  }
  msg.words.resize(*count);
  for (Word i = 0; i < *count; ++i) {
    auto w = r32(OFF_PAYLOAD + 4 * i);
    if (!w.ok()) return ErrorCode::FAULT;
    msg.words[i] = *w;
  }
  return msg;
}

void Kernel::unblock(TcbRef ref, TcbRecord* t) {
  t->blocked_on = NULL_REF;
  t->state = TaskState::RUNNABLE;
  set_runnable(ref);
}

TcbRef Kernel::pop_live(std::deque<TcbRef>& queue) {
  while (!queue.empty()) {
    TcbRef ref = queue.front();
    queue.pop_front();
    TcbRecord* t = objects_.tcb(ref);
    if (!t) continue;  // destroyed while queued
    if (t->state != TaskState::BLOCKED_SEND &&
        t->state != TaskState::BLOCKED_RECV) {
      continue;  // faulted or force-woken while queued
    }
    return ref;
  }
  return NULL_REF;
}

Result<IpcOutcome> Kernel::ipc_send(TcbRef sender, CapSlot slot,
                                    const Message& msg) {
  auto cap = lookup_cap(sender, slot);
  if (!cap.ok()) return cap.error();
  if (!cap->rights.has(Right::SEND)) return ErrorCode::NO_SEND_RIGHT;
  if (msg.words.size() > MAX_MSG_WORDS) return ErrorCode::MSG_TOO_LONG;
  TcbRecord* s = objects_.tcb(sender);

  if (msg.shared_buf) {
    VSpace* vs = vspace(s->vspace_id);
    auto pa = vs->translate_range(msg.shared_buf->base, msg.shared_buf->len,
                                  Perm::R);
    if (!pa.ok()) {
      raise_fault(sender, FAULT_BAD_READ);
      return ErrorCode::FAULT;
    }
  }

  Status st = marshal(s, msg);
  if (!st.ok()) {
    raise_fault(sender, FAULT_IPC_BUF);
    return st.error();
  }

  EndpointObject* ep = objects_.endpoint(cap->object);
  TcbRef rref = pop_live(ep->recv_queue);
  if (rref != NULL_REF) {
    TcbRecord* r = objects_.tcb(rref);
    st = transfer(s, r);
    if (!st.ok()) return st.error();
    auto delivered = unmarshal(r);
    if (!delivered.ok()) return delivered.error();
    delivered->badge = cap->badge;
    r->pending_recv = std::move(*delivered);
    if (msg.expects_reply) r->reply_to = sender;
    unblock(rref, r);
    trace_.emit(EventKind::IPC_SEND, s->ta_id,
                static_cast<Word>(msg.words.size()));
    trace_.emit(EventKind::IPC_RECV, r->ta_id,
                static_cast<Word>(msg.words.size()));
    return IpcOutcome::COMPLETED;
  }

  s->staged_send = msg;
  s->staged_badge = cap->badge;
  s->state = TaskState::BLOCKED_SEND;
  s->blocked_on = cap->object;
  ep->send_queue.push_back(sender);
  trace_.emit(EventKind::IPC_BLOCK, s->ta_id, 0);
  return IpcOutcome::BLOCKED;
}

Result<IpcOutcome> Kernel::ipc_recv(TcbRef receiver, CapSlot slot) {
  auto cap = lookup_cap(receiver, slot);
  if (!cap.ok()) return cap.error();
  if (!cap->rights.has(Right::RECV)) return ErrorCode::NO_RECV_RIGHT;
  TcbRecord* r = objects_.tcb(receiver);

  // Latched interrupt notifications outrank queued senders.
  if (deliver_queued_irq(cap->object, r)) {
    return IpcOutcome::COMPLETED;
  }

  EndpointObject* ep = objects_.endpoint(cap->object);
  TcbRef sref = pop_live(ep->send_queue);
  if (sref != NULL_REF) {
    TcbRecord* s = objects_.tcb(sref);
    Status st = transfer(s, r);
    if (!st.ok()) return st.error();
    auto delivered = unmarshal(r);
    if (!delivered.ok()) return delivered.error();
    Word nwords = static_cast<Word>(delivered->words.size());
    delivered->badge = s->staged_badge;
    bool is_call = delivered->expects_reply;
    r->pending_recv = std::move(*delivered);
    s->staged_send.reset();
    if (is_call) {
      r->reply_to = sref;
      s->state = TaskState::BLOCKED_RECV;
      s->blocked_on = NULL_REF;
      s->waiting_reply = true;
    } else {
      unblock(sref, s);
    }
    trace_.emit(EventKind::IPC_SEND, s->ta_id, nwords);
    trace_.emit(EventKind::IPC_RECV, r->ta_id, nwords);
    return IpcOutcome::COMPLETED;
  }

  r->state = TaskState::BLOCKED_RECV;
  r->blocked_on = cap->object;
  r->waiting_reply = false;
  ep->recv_queue.push_back(receiver);
  trace_.emit(EventKind::IPC_BLOCK, r->ta_id, 0);
  return IpcOutcome::BLOCKED;
}

Result<IpcOutcome> Kernel::ipc_call(TcbRef caller, CapSlot slot,
                                    const Message& msg) {
  Message call_msg = msg;
  call_msg.expects_reply = true;
  auto sent = ipc_send(caller, slot, call_msg);
  if (!sent.ok()) return sent.error();
  TcbRecord* c = objects_.tcb(caller);
  if (*sent == IpcOutcome::COMPLETED) {
    // Delivered straight to a waiting server; now wait for the reply.
    c->state = TaskState::BLOCKED_RECV;
    c->blocked_on = NULL_REF;
    c->waiting_reply = true;
  }
  return IpcOutcome::BLOCKED;
}

Result<IpcOutcome> Kernel::ipc_reply(TcbRef server, const Message& msg) {
  TcbRecord* v = objects_.tcb(server);
  if (!v) return ErrorCode::INVALID_TCB;
  if (msg.words.size() > MAX_MSG_WORDS) return ErrorCode::MSG_TOO_LONG;
  TcbRef caller_ref = v->reply_to;
  TcbRecord* c = objects_.tcb(caller_ref);
  if (!c || !c->waiting_reply) return ErrorCode::CAP_MISSING;

  Message reply = msg;
  reply.expects_reply = false;
  Status st = marshal(v, reply);
  if (!st.ok()) {
    raise_fault(server, FAULT_IPC_BUF);
    return st.error();
  }
  st = transfer(v, c);
  if (!st.ok()) return st.error();
  auto delivered = unmarshal(c);
  if (!delivered.ok()) return delivered.error();
  delivered->badge = 0;
  c->pending_recv = std::move(*delivered);
  c->waiting_reply = false;
  v->reply_to = NULL_REF;
  unblock(caller_ref, c);
  trace_.emit(EventKind::IPC_SEND, v->ta_id,
              static_cast<Word>(msg.words.size()));
  trace_.emit(EventKind::IPC_RECV, c->ta_id,
              static_cast<Word>(msg.words.size()));
  return IpcOutcome::COMPLETED;
}

std::optional<Message> Kernel::take_message(TcbRef tcb_ref) {
  TcbRecord* t = objects_.tcb(tcb_ref);
  if (!t || !t->pending_recv) return std::nullopt;
  std::optional<Message> out = std::move(t->pending_recv);
  t->pending_recv.reset();
  return out;
}

Result<TcbRef> Kernel::schedule() {
  for (auto it = run_queues_.rbegin(); it != run_queues_.rend(); ++it) {
    std::deque<TcbRef>& q = it->second;
    std::size_t budget = q.size();
    while (budget-- > 0) {
      TcbRef ref = q.front();
      q.pop_front();
      TcbRecord* t = objects_.tcb(ref);
      if (!t) continue;
      if (t->state != TaskState::RUNNABLE) {
        t->in_run_queue = false;
        continue;
      }
      q.push_back(ref);  // round-robin rotation among equal priorities
      return ref;
    }
  }
  return ErrorCode::IDLE;
}

void Kernel::set_runnable(TcbRef ref) {
  TcbRecord* t = objects_.tcb(ref);
  if (!t) return;
  t->state = TaskState::RUNNABLE;
  if (!t->in_run_queue) {
    run_queues_[t->priority].push_back(ref);
    t->in_run_queue = true;
  }
}

Status Kernel::destroy_ta(TcbRef ref) {
  TcbRecord* t = objects_.tcb(ref);
  if (!t) return Status(ErrorCode::INVALID_TCB);
  Word ta_id = t->ta_id;

  VSpace* vs = vspace(t->vspace_id);
  std::set<Addr> frames;
  if (vs) {
    for (const auto& [va, m] : vs->pages()) {
      if (m.shared) {
        // Leave shared-buffer frames alone while the peer still maps them.
        bool mapped_elsewhere = false;
        for (std::uint32_t vid = 0; vid < vspaces_.size() && !mapped_elsewhere;
             ++vid) {
          if (vid == t->vspace_id) continue;
          for (const auto& [ova, om] : vspaces_[vid].pages()) {
            if (om.frame == m.frame) {
              mapped_elsewhere = true;
              break;
            }
          }
        }
        if (mapped_elsewhere) continue;
      }
      frames.insert(m.frame);
    }
    std::vector<Addr> vas;
    vas.reserve(vs->pages().size());
    for (const auto& [va, m] : vs->pages()) vas.push_back(va);
    for (Addr va : vas) vs->unmap_page(va);
  }
  frames.insert(t->tcb_frame);

  for (Addr f : frames) {
    phys_.zero(f, PAGE_SIZE);
    auto owner = frame_owner_.find(f);
    if (owner != frame_owner_.end()) {
      owner->second->reclaim(f, PAGE_SIZE);
      frame_owner_.erase(owner);
    }
  }

  objects_.remove(ref);
  trace_.emit(EventKind::TA_DESTROY, ta_id, 0);
  return Status();
}

Status Kernel::register_interrupt(TcbRef caller, int irq, CapSlot slot) {
  auto cap = lookup_cap(caller, slot);
  if (!cap.ok()) return Status(cap.error());
  if (!cap->rights.has(Right::SEND)) {
    return Status(ErrorCode::NO_SEND_RIGHT);
  }
  irq_lines_[irq] = IrqLine{*cap, false, false};
  return Status();
}

Status Kernel::signal_interrupt(int irq) {
  auto it = irq_lines_.find(irq);
  if (it == irq_lines_.end()) {
    return Status(ErrorCode::UNREGISTERED_IRQ);
  }
  IrqLine& line = it->second;
  trace_.emit(EventKind::IRQ_RAISE, static_cast<Word>(irq), 0);
  if (line.pending) {
    // Suppressed: the handler has not acked the previous delivery yet.
    return Status();
  }
  line.pending = true;

  EndpointObject* ep = objects_.endpoint(line.handler.object);
  TcbRef rref = ep ? pop_live(ep->recv_queue) : NULL_REF;
  if (rref != NULL_REF) {
    TcbRecord* r = objects_.tcb(rref);
    Message note;
    note.label = static_cast<Word>(irq);
    note.badge = line.handler.badge;
    r->pending_recv = std::move(note);
    unblock(rref, r);
    trace_.emit(EventKind::IRQ_DELIVER, static_cast<Word>(irq), 0);
  } else {
    line.queued = true;
  }
  return Status();
}

bool Kernel::deliver_queued_irq(EndpointRef ep_ref, TcbRecord* receiver) {
  for (auto& [irq, line] : irq_lines_) {
    if (line.queued && line.handler.object == ep_ref) {
      line.queued = false;
      Message note;
      note.label = static_cast<Word>(irq);
      note.badge = line.handler.badge;
      receiver->pending_recv = std::move(note);
      trace_.emit(EventKind::IRQ_DELIVER, static_cast<Word>(irq), 0);
      return true;
    }
  }
  return false;
}

Status Kernel::ack_interrupt(int irq) {
  auto it = irq_lines_.find(irq);
  if (it == irq_lines_.end()) {
    return Status(ErrorCode::UNREGISTERED_IRQ);
  }
  IrqLine& line = it->second;
  if (!line.pending) return Status(ErrorCode::NOT_PENDING);
  line.pending = false;
  line.queued = false;
  trace_.emit(EventKind::IRQ_ACK, static_cast<Word>(irq), 0);
  return Status();
}

Result<Bytes> Kernel::user_read(TcbRef tcb_ref, Addr va, std::size_t len) {
  TcbRecord* t = objects_.tcb(tcb_ref);
  if (!t) return ErrorCode::INVALID_TCB;
  VSpace* vs = vspace(t->vspace_id);
  Bytes out;
  out.reserve(len);
  Addr cur = va;
  std::size_t remaining = len;
  while (remaining > 0) {
    std::size_t chunk =
        std::min<std::size_t>(remaining, PAGE_SIZE - (cur % PAGE_SIZE));
    auto pa = vs->translate(cur, Perm::R);
    if (!pa.ok()) {
      raise_fault(tcb_ref, FAULT_BAD_READ);
      return ErrorCode::FAULT;
    }
    const std::uint8_t* src = phys_.data(*pa);
    out.insert(out.end(), src, src + chunk);
    cur += chunk;
    remaining -= chunk;
  }
  return out;
}

Status Kernel::user_write(TcbRef tcb_ref, Addr va, ByteSpan data) {
  TcbRecord* t = objects_.tcb(tcb_ref);
  if (!t) return Status(ErrorCode::INVALID_TCB);
  VSpace* vs = vspace(t->vspace_id);
  Addr cur = va;
  std::size_t off = 0;
  while (off < data.size()) {
    std::size_t chunk =
        std::min<std::size_t>(data.size() - off, PAGE_SIZE - (cur % PAGE_SIZE));
    auto pa = vs->translate(cur, Perm::W);
    if (!pa.ok()) {
      raise_fault(tcb_ref, FAULT_BAD_WRITE);
      return Status(ErrorCode::FAULT);
    }
    std::copy(data.begin() + off, data.begin() + off + chunk, phys_.data(*pa));
    cur += chunk;
    off += chunk;
  }
  return Status();
}

Result<Word> Kernel::user_read32(TcbRef tcb_ref, Addr va) {
  auto bytes = user_read(tcb_ref, va, 4);
  if (!bytes.ok()) return bytes.error();
  return get_le32(bytes->data());
}

Status Kernel::user_write32(TcbRef tcb_ref, Addr va, Word value) {
  Bytes raw;
  put_le32(raw, value);
  return user_write(tcb_ref, va, raw);
}

void Kernel::raise_fault(TcbRef tcb_ref, Word code) {
  TcbRecord* t = objects_.tcb(tcb_ref);
  if (!t) return;
  t->state = TaskState::INACTIVE;  // suspended pending Root Task action
  t->faulted = true;
  t->fault_code = code;
  fault_queue_.push_back(FaultRecord{t->ta_id, code});
  trace_.emit(EventKind::TA_FAULT, t->ta_id, code);
}

std::optional<FaultRecord> Kernel::take_fault() {
  if (fault_queue_.empty()) return std::nullopt;
  FaultRecord rec = fault_queue_.front();
  fault_queue_.pop_front();
  return rec;
}

Status Kernel::write_registers(TcbRef caller, TcbRef target,
                               const std::array<Word, 16>& regs, Addr sp,
                               Addr pc) {
  if (!(caller == root_)) return Status(ErrorCode::CAP_MISSING);
  TcbRecord* t = objects_.tcb(target);
  if (!t) return Status(ErrorCode::INVALID_TCB);
  t->register_file = regs;
  t->stack_pointer = sp;
  t->program_counter = pc;
  return Status();
}

}  // namespace microtee
