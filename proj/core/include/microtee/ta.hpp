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

#include "microtee/kernel.hpp"
#include "microtee/task.hpp"
#include "microtee/wire.hpp"

namespace microtee {

// Base class for trusted applications. A TA owns one receive endpoint and
// loops: recv request, compute, reply. Requests arrive from the Root Task
// either inline (a single argument word) or through the shared buffer the
// Root Task mapped for this TA ([length word] plus buffer descriptor).
//
// Replies always carry the primary result in word 0. When the request
// came through the shared buffer, any result bytes are written back into
// that buffer and word 0 is their length.
class TrustedApp : public Task {
 public:
  explicit TrustedApp(Kernel& kernel) : kernel_(kernel) {}

  void resume(Machine& m) override;

  CapSlot ep_slot = NULL_SLOT;       // receive cap for own endpoint
  CapSlot crypto_slot = NULL_SLOT;   // send cap to the Crypto Service
  CapSlot keymgmt_slot = NULL_SLOT;  // send cap to Key Management
  SharedBufDesc shared{};            // root/TA shared buffer, len 0 if none

  // Compute a reply for one request. May fault the TA (bad memory access),
  // in which case the returned message is discarded.
  virtual Message handle(Machine& m, const Message& req) = 0;

 protected:
  // Issue a request to a security service and run the system until its
  // reply arrives. For shared-buffer requests the response payload is read
  // back out of the buffer.
  Result<ServiceResponse> call_service(Machine& m, CapSlot slot,
                                       const ServiceRequest& req);

  // Fetch the request payload: either the inline argument word as 4 bytes
  // or words[0] bytes out of the shared buffer.
  Result<Bytes> request_payload(const Message& req);

  // Deposit result bytes for the Root Task and build the reply header.
  Message reply_bytes(const Message& req, ByteSpan data);

  Kernel& kernel_;
};

// Command 3 tie-in: replies with its argument plus one, mod 2^32.
class IncrementTa : public TrustedApp {
 public:
  using TrustedApp::TrustedApp;
  const char* name() const override { return "increment"; }

 protected:
  Message handle(Machine& m, const Message& req) override;
};

// Demonstrates the Crypto Service and sealing: hashes the request payload,
// then seals digest | payload through Key Management and returns the blob.
class CryptoClientTa : public TrustedApp {
 public:
  using TrustedApp::TrustedApp;
  const char* name() const override { return "crypto_client"; }

 protected:
  Message handle(Machine& m, const Message& req) override;
};

// Attestation front end. An empty payload fetches the attestation public
// key (SPKI DER); a non-empty payload is signed as a claims blob.
class AttestTa : public TrustedApp {
 public:
  using TrustedApp::TrustedApp;
  const char* name() const override { return "attest"; }

 protected:
  Message handle(Machine& m, const Message& req) override;
};

}  // namespace microtee
