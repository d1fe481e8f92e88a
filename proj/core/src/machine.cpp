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

#include "microtee/machine.hpp"

namespace microtee {

namespace {

// Nominal entry points, only visible in saved contexts.
constexpr Addr SECURE_ENTRY_PC = 0x0000'1000;
constexpr Addr NORMAL_ENTRY_PC = 0x0000'8000;

// A drive pass that schedules this many times without any task making
// progress is stuck (every runnable TCB already has a resume() frame on
// the stack, or is a bare TCB nobody drives).
constexpr int MAX_BARREN_STEPS = 64;

// Hard ceiling on scheduling steps per drive; a hang here would be a
// simulator bug, not guest behavior.
constexpr long DRIVE_STEP_LIMIT = 50'000'000;

}  // namespace

Machine::Machine() : kernel_(phys_, trace_), monitor_(trace_) {}

Status Machine::boot(const RomState& rom, const std::array<Bytes, 5>& images,
                     const KeyFile& keys, std::uint64_t seed) {
  report_ = boot_chain(rom, images, trace_);
  keys_ = keys;
  system_ut_ =
      std::make_unique<UntypedMemory>(UNTYPED_BASE, PHYS_SIZE - UNTYPED_BASE);

  if (report_.secure_ready) {
    std::uint32_t rvs = kernel_.create_vspace();
    auto rt = kernel_.create_tcb(*system_ut_, ROOT_PRIORITY, rvs, 0);
    if (!rt.ok()) return rt.error();
    kernel_.set_root(*rt);

    root_ = std::make_unique<RootTask>(kernel_, monitor_);
    root_->tcb = *rt;
    attach_task(root_.get());

    WorldContext secure{};
    secure.world = WorldTag::SECURE;
    secure.program_counter = SECURE_ENTRY_PC;
    monitor_.init_world(WorldTag::SECURE, secure);

    BootEnvironment env;
    env.untyped = system_ut_.get();
    env.keys = &keys_;
    env.seed = seed;
    Status s = root_->init(*this, env);
    if (!s.ok()) return s;
  }

  if (report_.booted) {
    WorldContext normal{};
    normal.world = WorldTag::NORMAL;
    normal.program_counter = NORMAL_ENTRY_PC;
    monitor_.init_world(WorldTag::NORMAL, normal);
    return Status();
  }
  return ErrorCode::NOT_BOOTED;
}

Result<Word> Machine::smc_invoke(Word command_id, Word args) {
  if (!report_.booted || !root_) return ErrorCode::NOT_BOOTED;
  smc_result_.reset();
  auto enter = monitor_.smc_trap(SmcRequest{command_id, args});
  if (!enter.ok()) return enter.error();

  // Secure entry stub: the request rides in r0/r1 of the restored world.
  const WorldContext* secure = *enter;
  root_->deliver_smc(secure->register_file[0], secure->register_file[1]);
  if (!drive_until([this] { return smc_result_.has_value(); })) {
    return ErrorCode::IDLE;
  }
  // Back in the normal world; the result word sits in r0.
  return monitor_.executing_context().register_file[0];
}

Result<SmcPayloadResult> Machine::smc_invoke_payload(Word command_id,
                                                     ByteSpan payload) {
  if (!report_.booted || !root_) return ErrorCode::NOT_BOOTED;
  Word handle = monitor_.register_buffer(Bytes(payload.begin(), payload.end()));
  auto status = smc_invoke(command_id, handle);
  if (!status.ok()) {
    monitor_.release_handle(handle);
    return status.error();
  }
  SmcPayloadResult out;
  out.status = *status;
  if (auto buf = monitor_.resolve_handle(handle); buf.ok()) {
    out.data = std::move(**buf);
  }
  monitor_.release_handle(handle);
  return out;
}

void Machine::smc_return(Word result) {
  auto back = monitor_.smc_trap(SmcRequest{result, 0});
  (void)back;  // normal world was initialized at boot
  smc_result_ = result;
}

bool Machine::drive_until(const std::function<bool()>& cond) {
  int barren = 0;
  for (long steps = 0; steps < DRIVE_STEP_LIMIT; ++steps) {
    if (cond()) return true;
    auto next = kernel_.schedule();
    if (!next.ok()) return cond();  // idle: nothing left to run
    std::uint64_t key = pack(*next);
    if (on_stack_.count(key)) {
      // Already being resumed further up the call stack; it can only
      // continue there.
      if (++barren > MAX_BARREN_STEPS) return cond();
      continue;
    }
    Task* task = task_for(*next);
    if (!task) {
      // A bare TCB (benchmark client) has no code to run here.
      if (++barren > MAX_BARREN_STEPS) return cond();
      continue;
    }
    barren = 0;
    on_stack_.insert(key);
    task->resume(*this);
    on_stack_.erase(key);
  }
  return cond();
}

void Machine::attach_task(Task* task) { tasks_[pack(task->tcb)] = task; }

void Machine::detach_task(TcbRef ref) { tasks_.erase(pack(ref)); }

void Machine::start_task(Task& task) {
  std::uint64_t key = pack(task.tcb);
  on_stack_.insert(key);
  task.resume(*this);
  on_stack_.erase(key);
}

Task* Machine::task_for(TcbRef ref) {
  auto it = tasks_.find(pack(ref));
  return it == tasks_.end() ? nullptr : it->second;
}

void Machine::log_line(std::string line) { log_.push_back(std::move(line)); }

}  // namespace microtee
