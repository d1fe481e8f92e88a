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

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "microtee/kernel.hpp"
#include "microtee/monitor.hpp"
#include "microtee/services.hpp"
#include "microtee/ta.hpp"
#include "microtee/task.hpp"

namespace microtee {

// Everything the Root Task needs handed over by the boot path. Checked at
// init; a missing or empty piece means the secure world cannot start.
struct BootEnvironment {
  UntypedMemory* untyped = nullptr;
  const KeyFile* keys = nullptr;
  std::uint64_t seed = 0;
};

struct TaOptions {
  int priority = 100;
  bool give_crypto = false;    // grant a send cap to the Crypto Service
  bool give_keymgmt = false;   // grant a send cap to Key Management
  std::size_t shared_bytes = 0;  // root/TA shared buffer, page-rounded
};

// A bare, harness-driven client TCB with service send caps and a shared
// buffer. Used by the benchmark suites to hit the services without the
// SMC and Root Task hops in the measured path.
struct BenchClient {
  TcbRef tcb = NULL_REF;
  CapSlot crypto_slot = NULL_SLOT;
  CapSlot keymgmt_slot = NULL_SLOT;
  SharedBufDesc shared{};
};

// The first and most privileged secure task. Owns all endpoints, starts
// the security services and trusted applications, and dispatches SMC
// requests by command identifier. Unknown identifiers are answered
// directly with STATUS_IGNORED; no TA runs.
class RootTask : public Task {
 public:
  RootTask(Kernel& kernel, Monitor& monitor)
      : kernel_(kernel), monitor_(monitor) {}

  // Brings up services and the stock TAs. The TCB must already exist and
  // be installed via Kernel::set_root.
  Status init(Machine& m, const BootEnvironment& env);

  // Normal-world entry: queue one request and mark the task runnable.
  void deliver_smc(Word command_id, Word args);

  void resume(Machine& m) override;
  const char* name() const override { return "root_task"; }

  // Creates vspace, TCB, endpoint and caps for a TA and binds it to the
  // next free command identifier.
  Result<Word> register_ta(Machine& m, std::unique_ptr<TrustedApp> app,
                           const TaOptions& opts);

  Result<BenchClient> create_bench_client(std::size_t shared_bytes);

  CryptoService* crypto_service() { return crypto_.get(); }
  KeyManagementService* key_management() { return keymgmt_.get(); }
  TcbRef ta_tcb(Word command_id) const;
  TrustedApp* ta(Word command_id);
  std::size_t ta_count() const { return registry_.size(); }

 private:
  struct Entry {
    TcbRef ta = NULL_REF;
    CapSlot call_slot = NULL_SLOT;  // root's full cap to the TA endpoint
    std::shared_ptr<TrustedApp> app;
    Addr shared_va = 0;
    std::size_t shared_len = 0;
  };

  Word dispatch(Machine& m, Word command_id, Word args);

  // Endpoint owned by root; returns root's full slot and installs a
  // restricted cap (rights plus the badge) in to's cspace.
  Result<std::pair<CapSlot, CapSlot>> make_endpoint(TcbRef to, Rights rights,
                                                    Word badge);

  // Derives a badged send cap from one of root's full slots and installs
  // it in to's cspace.
  Result<CapSlot> grant_send(CapSlot full_slot, TcbRef to, Word badge);

  Result<SharedBufDesc> map_shared(
      std::size_t bytes, const std::vector<std::uint32_t>& vspaces);

  Kernel& kernel_;
  Monitor& monitor_;
  UntypedMemory* untyped_ = nullptr;
  const KeyFile* keys_ = nullptr;
  std::uint64_t seed_ = 0;

  std::unique_ptr<CryptoService> crypto_;
  std::unique_ptr<KeyManagementService> keymgmt_;
  std::uint32_t crypto_vspace_ = 0;
  std::uint32_t keymgmt_vspace_ = 0;
  CapSlot crypto_full_slot_ = NULL_SLOT;   // root's granting caps
  CapSlot keymgmt_full_slot_ = NULL_SLOT;

  std::map<Word, Entry> registry_;
  Word next_command_id_ = 1;
  Addr next_shared_va_ = SHARED_VA_BASE;
  std::optional<std::pair<Word, Word>> inbox_;
};

}  // namespace microtee
