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

#include <string>
#include <vector>

#include "microtee/machine.hpp"

namespace microtee {

// One measured operation. context_switches is the monitor switch-counter
// delta per operation; paper_ref_ns is the published figure for the same
// operation on real hardware, 0 when none exists.
struct BenchRecord {
  std::string suite;
  std::string param;
  std::size_t iterations = 0;
  double mean_ns = 0.0;
  std::uint64_t context_switches = 0;
  double paper_ref_ns = 0.0;
};

std::string csv_header();
std::string csv_row(const BenchRecord& rec);
Status write_csv(const std::string& path,
                 const std::vector<BenchRecord>& records);

// Latency of the send and reply rendezvous legs for 0-word and 10-word
// payloads, 16-call averages.
Result<std::vector<BenchRecord>> bench_ipc(Machine& m);

// Full SMC round trip through the dispatcher (unknown command, so no TA
// work is included), with the world-switch count per call.
Result<std::vector<BenchRecord>> bench_switch(Machine& m);

// Service-side crypto across payload sizes plus RSA sign/verify at both
// key lengths.
Result<std::vector<BenchRecord>> bench_crypto(Machine& m);

// Dispatch by suite name: "ipc", "switch" or "crypto".
Result<std::vector<BenchRecord>> run_bench_suite(Machine& m,
                                                 const std::string& suite);

}  // namespace microtee
