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

#include "microtee/objects.hpp"

namespace microtee {

class Machine;

// A schedulable simulator task. resume() runs the task until it blocks
// (waiting for IPC) or parks itself; it must leave the TCB in a
// non-runnable state before returning, or the scheduler will call it
// again.
class Task {
 public:
  virtual ~Task() = default;
  virtual void resume(Machine& m) = 0;
  virtual const char* name() const = 0;

  TcbRef tcb = NULL_REF;
};

}  // namespace microtee
