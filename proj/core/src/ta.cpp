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

#include "microtee/ta.hpp"

#include <algorithm>
#include <cstring>

#include "microtee/machine.hpp"

namespace microtee {

void TrustedApp::resume(Machine& m) {
  EventTrace& trace = kernel_.trace();
  for (;;) {
    TcbRecord* self = kernel_.tcb(tcb);
    if (!self || self->faulted) return;
    if (!self->pending_recv) {
      auto r = kernel_.ipc_recv(tcb, ep_slot);
      if (!r.ok() || *r == IpcOutcome::BLOCKED) return;
    }
    Message req = *kernel_.take_message(tcb);
    trace.emit(EventKind::TA_RECV, req.label, req.badge);
    trace.emit(EventKind::TA_COMPUTE, req.label, 0);
    Message reply = handle(m, req);
    self = kernel_.tcb(tcb);
    if (!self || self->faulted) return;  // handler crashed this TA
    trace.emit(EventKind::TA_REPLY, req.label,
               reply.words.empty() ? 0 : reply.words[0]);
    if (!kernel_.ipc_reply(tcb, reply).ok()) return;
  }
}

Result<ServiceResponse> TrustedApp::call_service(Machine& m, CapSlot slot,
                                                 const ServiceRequest& req) {
  if (req.shared && !req.payload.empty()) {
    if (req.payload.size() > req.shared->len) return ErrorCode::MSG_TOO_LONG;
    Status put = kernel_.user_write(tcb, req.shared->base, req.payload);
    if (!put.ok()) return put.error();
  }
  auto msg = encode_request(req);
  if (!msg.ok()) return msg.error();
  auto sent = kernel_.ipc_call(tcb, slot, *msg);
  if (!sent.ok()) return sent.error();

  // The call leaves us blocked until the service replies; run everyone
  // else until the reply lands.
  bool made_progress = m.drive_until([&] {
    TcbRecord* t = kernel_.tcb(tcb);
    return !t || t->faulted || t->pending_recv;
  });
  TcbRecord* self = kernel_.tcb(tcb);
  if (!made_progress || !self || self->faulted) return ErrorCode::FAULT;

  std::optional<Message> reply = kernel_.take_message(tcb);
  if (!reply || reply->words.size() < 2) return ErrorCode::PARSE_ERROR;
  ServiceResponse resp;
  resp.status = static_cast<ErrorCode>(reply->words[0]);
  std::size_t nbytes = reply->words[1];
  if (resp.status != ErrorCode::OK) return resp;
  if (req.shared) {
    if (nbytes > req.shared->len) return ErrorCode::PARSE_ERROR;
    if (nbytes > 0) {
      auto data = kernel_.user_read(tcb, req.shared->base, nbytes);
      if (!data.ok()) return data.error();
      resp.payload = std::move(*data);
    }
  } else {
    if ((nbytes + 3) / 4 > reply->words.size() - 2) {
      return ErrorCode::PARSE_ERROR;
    }
    resp.payload = words_to_bytes(
        std::span<const Word>(reply->words).subspan(2), nbytes);
  }
  return resp;
}

Result<Bytes> TrustedApp::request_payload(const Message& req) {
  if (req.shared_buf) {
    std::size_t nbytes = req.words.empty() ? 0 : req.words[0];
    if (nbytes == 0) return Bytes{};
    if (nbytes > req.shared_buf->len) return ErrorCode::BAD_ARGUMENT;
    return kernel_.user_read(tcb, req.shared_buf->base, nbytes);
  }
  // Inline requests carry a single argument word; hand it over as bytes.
  Word arg = req.words.empty() ? 0 : req.words[0];
  Bytes out(4);
  std::memcpy(out.data(), &arg, 4);
  return out;
}

Message TrustedApp::reply_bytes(const Message& req, ByteSpan data) {
  Message reply;
  reply.label = req.label;
  if (req.shared_buf && !data.empty()) {
    std::size_t n = std::min<std::size_t>(data.size(), req.shared_buf->len);
    kernel_.user_write(tcb, req.shared_buf->base, data.first(n));
    reply.words = {static_cast<Word>(n)};
  } else {
    reply.words = {static_cast<Word>(data.size())};
  }
  return reply;
}

// --- increment -------------------------------------------------------------

Message IncrementTa::handle(Machine&, const Message& req) {
  Word arg = req.words.empty() ? 0 : req.words[0];
  Message reply;
  reply.label = req.label;
  reply.words = {arg + 1};  // unsigned wrap at 2^32
  return reply;
}

// --- crypto client ---------------------------------------------------------

Message CryptoClientTa::handle(Machine& m, const Message& req) {
  auto input = request_payload(req);
  if (!input.ok()) return reply_bytes(req, {});

  ServiceRequest sha_req;
  sha_req.service_id = SVC_SHA256;
  sha_req.payload = *input;
  if (shared.len) sha_req.shared = shared;
  auto digest = call_service(m, crypto_slot, sha_req);
  if (!digest.ok() || digest->status != ErrorCode::OK) {
    return reply_bytes(req, {});
  }

  // Seal digest | payload so the blob binds content to its hash.
  Bytes record = digest->payload;
  record.insert(record.end(), input->begin(), input->end());
  ServiceRequest seal_req;
  seal_req.service_id = SVC_SEAL;
  seal_req.payload = std::move(record);
  if (shared.len) seal_req.shared = shared;
  auto blob = call_service(m, keymgmt_slot, seal_req);
  if (!blob.ok() || blob->status != ErrorCode::OK) {
    return reply_bytes(req, {});
  }
  return reply_bytes(req, blob->payload);
}

// --- attestation -----------------------------------------------------------

Message AttestTa::handle(Machine& m, const Message& req) {
  auto input = request_payload(req);
  if (!input.ok()) return reply_bytes(req, {});

  ServiceRequest svc_req;
  if (input->empty()) {
    svc_req.service_id = SVC_GET_ATTEST_PUBKEY;
  } else {
    svc_req.service_id = SVC_ATTEST;
    svc_req.payload = *input;
  }
  if (shared.len) svc_req.shared = shared;
  auto resp = call_service(m, keymgmt_slot, svc_req);
  if (!resp.ok() || resp->status != ErrorCode::OK) {
    return reply_bytes(req, {});
  }
  return reply_bytes(req, resp->payload);
}

}  // namespace microtee
