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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "microtee/kernel.hpp"
#include "microtee/keyfile.hpp"
#include "microtee/monitor.hpp"
#include "microtee/root_task.hpp"
#include "microtee/secure_boot.hpp"
#include "microtee/task.hpp"

namespace microtee {

// Untyped memory handed to the Root Task: everything above the first
// megabyte, which stands in for the kernel's own footprint.
inline constexpr Addr UNTYPED_BASE = 1u * 1024 * 1024;

inline constexpr int ROOT_PRIORITY = 255;

// Result of a payload-carrying SMC. status is the raw word the secure
// world returned (a length for data-bearing commands, or one of the
// STATUS_* sentinels); data is the monitor buffer contents afterwards.
struct SmcPayloadResult {
  Word status = 0;
  Bytes data;
};

// One simulated device: physical memory, secure kernel, monitor and the
// normal-world stub that issues SMCs. Tasks run cooperatively; resume()
// of the scheduled task executes until it blocks.
class Machine {
 public:
  Machine();

  Machine(const Machine&) = delete;
  Machine& operator=(const Machine&) = delete;

  // Runs the verified boot chain; when the chain clears ROOT_TASK the
  // secure world (kernel, root task, services, TAs) is brought up, and
  // when it clears MOBILE_OS the normal world is too. Returns OK only for
  // a fully booted device.
  Status boot(const RomState& rom, const std::array<Bytes, 5>& images,
              const KeyFile& keys, std::uint64_t seed);

  const BootReport& boot_report() const { return report_; }
  bool booted() const { return report_.booted; }

  // Normal-world SMC with a single argument word.
  Result<Word> smc_invoke(Word command_id, Word args);

  // Normal-world SMC with a byte payload through a monitor-registered
  // buffer.
  Result<SmcPayloadResult> smc_invoke_payload(Word command_id,
                                              ByteSpan payload);

  // Runs ready tasks until cond() holds. False means the system went
  // idle (or span in place) with the condition still unmet.
  bool drive_until(const std::function<bool()>& cond);

  // Task binding. Tasks are owned by their creator (usually the Root
  // Task); the machine only schedules them.
  void attach_task(Task* task);
  void detach_task(TcbRef ref);
  void start_task(Task& task);  // resume now, until it parks

  // Secure-world side of an SMC: trap back and deposit the result word.
  void smc_return(Word result);

  void log_line(std::string line);
  const std::vector<std::string>& log() const { return log_; }

  Kernel& kernel() { return kernel_; }
  Monitor& monitor() { return monitor_; }
  EventTrace& trace() { return trace_; }
  PhysicalMemory& phys() { return phys_; }
  UntypedMemory& untyped() { return *system_ut_; }
  RootTask* root() { return root_.get(); }
  const KeyFile& keys() const { return keys_; }

 private:
  static std::uint64_t pack(TcbRef ref) {
    return (static_cast<std::uint64_t>(ref.index) << 32) | ref.generation;
  }
  Task* task_for(TcbRef ref);

  PhysicalMemory phys_;
  EventTrace trace_;
  Kernel kernel_;
  Monitor monitor_;
  KeyFile keys_;
  std::unique_ptr<UntypedMemory> system_ut_;
  BootReport report_;
  std::unique_ptr<RootTask> root_;
  std::map<std::uint64_t, Task*> tasks_;
  std::set<std::uint64_t> on_stack_;  // resume() frames on the C++ stack
  std::optional<Word> smc_result_;
  std::vector<std::string> log_;
};

}  // namespace microtee
