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

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "microtee/memory.hpp"
#include "microtee/objects.hpp"
#include "microtee/result.hpp"
#include "microtee/trace.hpp"
#include "microtee/words.hpp"

namespace microtee {

// Retyped object sizes. Everything is page-granular because the untyped
// allocator hands out pages.
inline constexpr std::size_t TCB_SIZE = PAGE_SIZE;
inline constexpr std::size_t ENDPOINT_SIZE = PAGE_SIZE;

// Default virtual address of a task's kernel-mapped IPC buffer.
inline constexpr Addr IPC_BUF_VA = 0x7F00'0000;

enum class IpcOutcome {
  COMPLETED,  // rendezvous happened; recv results are in pending_recv
  BLOCKED,    // caller left the runnable set; resume when unblocked
};

struct FaultRecord {
  Word ta_id = 0;
  Word code = 0;
};

// Secure-world kernel state machine. All operations are synchronous calls
// that mutate kernel state; "blocking" means the TCB leaves the runnable
// set and the driver must not run it until it is made runnable again.
class Kernel {
 public:
  Kernel(PhysicalMemory& phys, EventTrace& trace);

  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  // --- Address spaces and untyped memory -----------------------------------

  std::uint32_t create_vspace();
  VSpace* vspace(std::uint32_t id);

  // Retypes page-rounded, zero-filled frames out of ut.
  Result<Addr> alloc_frames(UntypedMemory& ut, std::size_t bytes);

  // Mapping is page-granular; refuses to map a frame writable into two
  // distinct vspaces unless the mapping is flagged shared.
  Status map_range(std::uint32_t vspace_id, Addr va, Addr pa, std::size_t len,
                   Perm perms, bool shared = false);

  // --- Object construction -------------------------------------------------

  Result<TcbRef> create_tcb(UntypedMemory& ut, int priority,
                            std::uint32_t vspace_id, Word ta_id);

  // Installs a {send, recv, grant} capability in owner's cspace.
  Result<CapSlot> create_endpoint(UntypedMemory& ut, TcbRef owner);

  // Installs a copy with a rights subset (and fresh badge) in the same
  // cspace; the source capability is unchanged.
  Result<CapSlot> derive_capability(TcbRef tcb, CapSlot slot, Rights keep,
                                    Word badge);

  // Moves a copy of from's capability into to's cspace. The grant right is
  // dropped from the installed copy unless keep_grant is set.
  Result<CapSlot> grant_capability(TcbRef from, CapSlot slot, TcbRef to,
                                   bool keep_grant = false);

  // --- IPC -----------------------------------------------------------------

  Result<IpcOutcome> ipc_send(TcbRef sender, CapSlot slot, const Message& msg);
  Result<IpcOutcome> ipc_recv(TcbRef receiver, CapSlot slot);
  // Send plus wait-for-reply; always leaves the caller blocked on success.
  Result<IpcOutcome> ipc_call(TcbRef caller, CapSlot slot, const Message& msg);
  // Replies to the caller recorded at delivery time. Never blocks.
  Result<IpcOutcome> ipc_reply(TcbRef server, const Message& msg);

  // Takes the delivered message after a completed recv / unblock.
  std::optional<Message> take_message(TcbRef tcb);

  // --- Scheduling ----------------------------------------------------------

  Result<TcbRef> schedule();
  void set_runnable(TcbRef tcb);

  // --- Lifecycle -----------------------------------------------------------

  Status destroy_ta(TcbRef tcb);

  // --- Interrupts ----------------------------------------------------------

  Status register_interrupt(TcbRef caller, int irq, CapSlot slot);
  Status signal_interrupt(int irq);
  Status ack_interrupt(int irq);

  // --- User memory access (the fault path) ---------------------------------
  //
  // Every user-mode load/store goes through these; a translation or
  // permission failure faults the task (suspend + Root Task notification)
  // and returns FAULT.

  Result<Bytes> user_read(TcbRef tcb, Addr va, std::size_t len);
  Status user_write(TcbRef tcb, Addr va, ByteSpan data);
  Result<Word> user_read32(TcbRef tcb, Addr va);
  Status user_write32(TcbRef tcb, Addr va, Word value);

  // --- Faults --------------------------------------------------------------

  void raise_fault(TcbRef tcb, Word code);
  std::optional<FaultRecord> take_fault();
  bool has_pending_fault() const { return !fault_queue_.empty(); }

  // --- Root task plumbing --------------------------------------------------

  void set_root(TcbRef root) { root_ = root; }
  TcbRef root() const { return root_; }

  // TCB register/priority mutation is restricted to the Root Task.
  Status write_registers(TcbRef caller, TcbRef target,
                         const std::array<Word, 16>& regs, Addr sp, Addr pc);

  // --- Introspection -------------------------------------------------------

  TcbRecord* tcb(TcbRef ref) { return objects_.tcb(ref); }
  const TcbRecord* tcb(TcbRef ref) const { return objects_.tcb(ref); }
  EndpointObject* endpoint(EndpointRef ref) { return objects_.endpoint(ref); }
  ObjectTable& objects() { return objects_; }
  PhysicalMemory& phys() { return phys_; }
  EventTrace& trace() { return trace_; }

 private:
  struct IrqLine {
    Capability handler;
    bool pending = false;   // signaled, not yet acked
    bool queued = false;    // delivery latched, waiting for a receiver
  };

  Result<Capability> lookup_cap(TcbRef tcb, CapSlot slot);
  Result<CapSlot> install_cap(TcbRef tcb, Capability cap);

  // Word-by-word copy of the marshalled message frame between IPC buffers,
  // each word translated through both vspaces.
  Status marshal(TcbRecord* t, const Message& msg);
  Status transfer(TcbRecord* from, TcbRecord* to);
  Result<Message> unmarshal(TcbRecord* t);

  void unblock(TcbRef ref, TcbRecord* t);
  bool deliver_queued_irq(EndpointRef ep_ref, TcbRecord* receiver);
  TcbRef pop_live(std::deque<TcbRef>& queue);

  PhysicalMemory& phys_;
  EventTrace& trace_;
  ObjectTable objects_;
  std::vector<VSpace> vspaces_;
  std::map<int, std::deque<TcbRef>> run_queues_;  // priority -> FIFO
  std::map<int, IrqLine> irq_lines_;
  std::deque<FaultRecord> fault_queue_;
  std::map<Addr, UntypedMemory*> frame_owner_;  // frame base -> origin ut
  TcbRef root_ = NULL_REF;
};

}  // namespace microtee
