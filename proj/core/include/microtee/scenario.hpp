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

#include <iosfwd>
#include <string>
#include <vector>

#include "microtee/machine.hpp"

namespace microtee {

// Everything needed to boot a device: provisioned keys, the matching ROM
// state and a signed five-image chain.
struct BootBundle {
  KeyFile keys;
  RomState rom;
  std::array<Bytes, 5> images;  // chain order
};

// Deterministic for a given seed; payloads are small stand-in firmware
// blobs signed with freshly provisioned keys.
BootBundle make_boot_bundle(std::uint64_t seed);

// Boots a machine from the bundle. The same seed feeds the bundle and
// the secure world RNG.
Status boot_machine(Machine& m, const BootBundle& bundle, std::uint64_t seed);

bool scenario_exists(const std::string& name);
const std::vector<std::string>& scenario_names();

// Runs one named scenario against a booted machine, writing progress to
// out. Returns 0 on success, 1 on failure.
int run_scenario(Machine& m, const std::string& name, std::ostream& out);

}  // namespace microtee
