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

#include "microtee/root_task.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "microtee/machine.hpp"

namespace microtee {

namespace {

constexpr int SERVICE_PRIORITY = 200;
constexpr int BENCH_CLIENT_PRIORITY = 150;

// Trace identifiers for the non-TA tasks.
constexpr Word TRACE_ID_CRYPTO = 0x100;
constexpr Word TRACE_ID_KEYMGMT = 0x101;
constexpr Word TRACE_ID_BENCH = 0x200;

}  // namespace

Status RootTask::init(Machine& m, const BootEnvironment& env) {
  if (!env.untyped || env.untyped->free_bytes() == 0 || !env.keys) {
    return ErrorCode::BOOT_ENV_INVALID;
  }
  untyped_ = env.untyped;
  keys_ = env.keys;
  seed_ = env.seed;

  // Security services run as separate tasks in separate address spaces;
  // only Key Management ever sees the platform keys.
  crypto_ = std::make_unique<CryptoService>(kernel_, seed_ ^ 0xC0FFEEull);
  keymgmt_ = std::make_unique<KeyManagementService>(kernel_,
                                                    seed_ ^ 0x5EA15EA1ull,
                                                    *keys_);

  crypto_vspace_ = kernel_.create_vspace();
  auto ctcb = kernel_.create_tcb(*untyped_, SERVICE_PRIORITY, crypto_vspace_,
                                 TRACE_ID_CRYPTO);
  if (!ctcb.ok()) return ctcb.error();
  crypto_->tcb = *ctcb;
  auto cep = make_endpoint(*ctcb, Rights{Right::RECV}, 0);
  if (!cep.ok()) return cep.error();
  crypto_full_slot_ = cep->first;
  crypto_->set_endpoint(cep->second);

  keymgmt_vspace_ = kernel_.create_vspace();
  auto ktcb = kernel_.create_tcb(*untyped_, SERVICE_PRIORITY, keymgmt_vspace_,
                                 TRACE_ID_KEYMGMT);
  if (!ktcb.ok()) return ktcb.error();
  keymgmt_->tcb = *ktcb;
  auto kep = make_endpoint(*ktcb, Rights{Right::RECV}, 0);
  if (!kep.ok()) return kep.error();
  keymgmt_full_slot_ = kep->first;
  keymgmt_->set_endpoint(kep->second);

  m.attach_task(crypto_.get());
  m.attach_task(keymgmt_.get());
  m.start_task(*crypto_);   // parks blocked in recv
  m.start_task(*keymgmt_);

  // Stock trusted applications, one command id each.
  {
    TaOptions o;
    o.give_crypto = true;
    o.give_keymgmt = true;
    o.shared_bytes = 4 * PAGE_SIZE;
    auto id = register_ta(m, std::make_unique<CryptoClientTa>(kernel_), o);
    if (!id.ok()) return id.error();
  }
  {
    TaOptions o;
    o.give_keymgmt = true;
    o.shared_bytes = 2 * PAGE_SIZE;
    auto id = register_ta(m, std::make_unique<AttestTa>(kernel_), o);
    if (!id.ok()) return id.error();
  }
  {
    auto id = register_ta(m, std::make_unique<IncrementTa>(kernel_),
                          TaOptions{});
    if (!id.ok()) return id.error();
  }
  return Status();
}

Result<std::pair<CapSlot, CapSlot>> RootTask::make_endpoint(TcbRef to,
                                                            Rights rights,
                                                            Word badge) {
  auto full = kernel_.create_endpoint(*untyped_, tcb);
  if (!full.ok()) return full.error();
  // The grant right travels with the copy and is dropped on installation,
  // so the receiver ends up with exactly the requested rights.
  Rights with_grant =
      rights.intersect(FULL_ENDPOINT_RIGHTS).plus(Right::GRANT);
  auto derived = kernel_.derive_capability(tcb, *full, with_grant, badge);
  if (!derived.ok()) return derived.error();
  auto installed = kernel_.grant_capability(tcb, *derived, to);
  if (!installed.ok()) return installed.error();
  return std::make_pair(*full, *installed);
}

Result<SharedBufDesc> RootTask::map_shared(
    std::size_t bytes, const std::vector<std::uint32_t>& vspaces) {
  std::size_t len = ((bytes + PAGE_SIZE - 1) / PAGE_SIZE) * PAGE_SIZE;
  auto pa = kernel_.alloc_frames(*untyped_, len);
  if (!pa.ok()) return pa.error();
  Addr va = next_shared_va_;
  next_shared_va_ += len + PAGE_SIZE;  // guard gap between buffers
  for (std::uint32_t id : vspaces) {
    Status s = kernel_.map_range(id, va, *pa, len, Perm::RW, /*shared=*/true);
    if (!s.ok()) return s.error();
  }
  return SharedBufDesc{va, static_cast<Word>(len)};
}

Result<Word> RootTask::register_ta(Machine& m, std::unique_ptr<TrustedApp> app,
                                   const TaOptions& opts) {
  if (!untyped_) return ErrorCode::BOOT_ENV_INVALID;
  const TcbRecord* self = kernel_.tcb(tcb);
  if (!self) return ErrorCode::INVALID_TCB;
  if (opts.priority < 0 || opts.priority >= self->priority) {
    return ErrorCode::INVALID_PRIORITY;
  }
  // Object creation below may grow the object table and move records.
  std::uint32_t root_vspace = self->vspace_id;
  self = nullptr;

  Word id = next_command_id_++;
  std::uint32_t vs = kernel_.create_vspace();
  auto ta_ref = kernel_.create_tcb(*untyped_, opts.priority, vs, id);
  if (!ta_ref.ok()) return ta_ref.error();

  Entry e;
  e.ta = *ta_ref;
  auto ep = make_endpoint(*ta_ref, Rights{Right::RECV}, 0);
  if (!ep.ok()) return ep.error();
  e.call_slot = ep->first;
  app->tcb = *ta_ref;
  app->ep_slot = ep->second;

  if (opts.give_crypto) {
    auto s = grant_send(crypto_full_slot_, *ta_ref, id);
    if (!s.ok()) return s.error();
    app->crypto_slot = *s;
  }
  if (opts.give_keymgmt) {
    auto s = grant_send(keymgmt_full_slot_, *ta_ref, id);
    if (!s.ok()) return s.error();
    app->keymgmt_slot = *s;
  }

  if (opts.shared_bytes) {
    std::vector<std::uint32_t> spaces{root_vspace, vs};
    if (opts.give_crypto) spaces.push_back(crypto_vspace_);
    if (opts.give_keymgmt) spaces.push_back(keymgmt_vspace_);
    auto desc = map_shared(opts.shared_bytes, spaces);
    if (!desc.ok()) return desc.error();
    e.shared_va = desc->base;
    e.shared_len = desc->len;
    app->shared = *desc;
  }

  e.app = std::move(app);
  Entry& stored = registry_[id] = std::move(e);
  m.attach_task(stored.app.get());
  kernel_.trace().emit(EventKind::TA_START, id, stored.ta.index);
  m.start_task(*stored.app);  // runs until parked in recv
  return id;
}

Result<CapSlot> RootTask::grant_send(CapSlot full_slot, TcbRef to,
                                     Word badge) {
  auto derived = kernel_.derive_capability(
      tcb, full_slot, Rights{Right::SEND, Right::GRANT}, badge);
  if (!derived.ok()) return derived.error();
  return kernel_.grant_capability(tcb, *derived, to);
}

Result<BenchClient> RootTask::create_bench_client(std::size_t shared_bytes) {
  if (!untyped_) return ErrorCode::BOOT_ENV_INVALID;
  std::uint32_t vs = kernel_.create_vspace();
  auto t = kernel_.create_tcb(*untyped_, BENCH_CLIENT_PRIORITY, vs,
                              TRACE_ID_BENCH);
  if (!t.ok()) return t.error();
  BenchClient c;
  c.tcb = *t;
  auto cs = grant_send(crypto_full_slot_, *t, TRACE_ID_BENCH);
  if (!cs.ok()) return cs.error();
  c.crypto_slot = *cs;
  auto ks = grant_send(keymgmt_full_slot_, *t, TRACE_ID_BENCH);
  if (!ks.ok()) return ks.error();
  c.keymgmt_slot = *ks;
  if (shared_bytes) {
    auto desc = map_shared(shared_bytes,
                           {vs, crypto_vspace_, keymgmt_vspace_});
    if (!desc.ok()) return desc.error();
    c.shared = *desc;
  }
  return c;
}

void RootTask::deliver_smc(Word command_id, Word args) {
  inbox_ = std::make_pair(command_id, args);
  kernel_.set_runnable(tcb);
}

void RootTask::resume(Machine& m) {
  for (;;) {
    while (auto f = kernel_.take_fault()) {
      m.log_line("root_task: ta " + std::to_string(f->ta_id) +
                 " faulted (code " + std::to_string(f->code) + ")");
    }
    if (!inbox_) {
      // Park until the next SMC arrives.
      TcbRecord* self = kernel_.tcb(tcb);
      if (self) {
        self->state = TaskState::BLOCKED_RECV;
        self->blocked_on = NULL_REF;
      }
      return;
    }
    auto [id, args] = *inbox_;
    inbox_.reset();
    Word result = dispatch(m, id, args);
    m.smc_return(result);
  }
}

Word RootTask::dispatch(Machine& m, Word command_id, Word args) {
  EventTrace& trace = kernel_.trace();
  trace.emit(EventKind::ROOT_DISPATCH, command_id, args);

  auto it = registry_.find(command_id);
  if (it == registry_.end()) {
    trace.emit(EventKind::ROOT_IGNORED, command_id, args);
    return STATUS_IGNORED;
  }
  Entry& e = it->second;
  TcbRecord* ta = kernel_.tcb(e.ta);
  if (!ta || ta->faulted || ta->state == TaskState::INACTIVE) {
    trace.emit(EventKind::ROOT_RETURN, command_id, STATUS_TA_FAULTED);
    return STATUS_TA_FAULTED;
  }

  Message req;
  req.label = command_id;
  Bytes* handle_buf = nullptr;
  if (args & SHARED_HANDLE_FLAG) {
    auto buf = monitor_.resolve_handle(args);
    if (!buf.ok() || e.shared_len == 0 || (*buf)->size() > e.shared_len) {
      trace.emit(EventKind::ROOT_RETURN, command_id, STATUS_BAD_HANDLE);
      return STATUS_BAD_HANDLE;
    }
    handle_buf = *buf;
    if (!handle_buf->empty()) {
      Status w = kernel_.user_write(tcb, e.shared_va, *handle_buf);
      if (!w.ok()) {
        trace.emit(EventKind::ROOT_RETURN, command_id, STATUS_BAD_HANDLE);
        return STATUS_BAD_HANDLE;
      }
    }
    req.words = {static_cast<Word>(handle_buf->size())};
    req.shared_buf =
        SharedBufDesc{e.shared_va, static_cast<Word>(e.shared_len)};
  } else {
    req.words = {args};
  }

  trace.emit(EventKind::ROOT_SEND, command_id, e.ta.index);
  auto sent = kernel_.ipc_call(tcb, e.call_slot, req);
  if (!sent.ok()) {
    trace.emit(EventKind::ROOT_RETURN, command_id, STATUS_TA_FAULTED);
    return STATUS_TA_FAULTED;
  }
  bool replied = m.drive_until([&] {
    const TcbRecord* self = kernel_.tcb(tcb);
    const TcbRecord* t = kernel_.tcb(e.ta);
    return (self && self->pending_recv) || !t || t->faulted;
  });
  TcbRecord* self = kernel_.tcb(tcb);
  if (!replied || !self || !self->pending_recv) {
    // The TA died mid-request; unwind our blocked call and report it.
    if (self) {
      self->state = TaskState::RUNNABLE;
      self->waiting_reply = false;
      self->blocked_on = NULL_REF;
    }
    trace.emit(EventKind::ROOT_RETURN, command_id, STATUS_TA_FAULTED);
    return STATUS_TA_FAULTED;
  }

  Message reply = *kernel_.take_message(tcb);
  Word result = reply.words.empty() ? 0 : reply.words[0];
  trace.emit(EventKind::ROOT_RECV, command_id, result);

  if (handle_buf) {
    // Response bytes come back through the shared buffer; hand them to
    // the normal world through the monitor buffer.
    std::size_t n = std::min<std::size_t>(result, e.shared_len);
    handle_buf->clear();
    if (n) {
      auto data = kernel_.user_read(tcb, e.shared_va, n);
      if (data.ok()) *handle_buf = std::move(*data);
    }
  }
  trace.emit(EventKind::ROOT_RETURN, command_id, result);
  return result;
}

TcbRef RootTask::ta_tcb(Word command_id) const {
  auto it = registry_.find(command_id);
  return it == registry_.end() ? NULL_REF : it->second.ta;
}

TrustedApp* RootTask::ta(Word command_id) {
  auto it = registry_.find(command_id);
  return it == registry_.end() ? nullptr : it->second.app.get();
}

}  // namespace microtee
