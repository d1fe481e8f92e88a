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

#include "microtee/scenario.hpp"

#include <ostream>

#include "microtee/crypto/rng.hpp"
#include "microtee/crypto/rsa.hpp"
#include "microtee/crypto/sha256.hpp"

namespace microtee {

BootBundle make_boot_bundle(std::uint64_t seed) {
  crypto::Rng rng(seed);
  BootBundle b;
  b.keys = provision_keys(rng);
  b.rom.pubkey_hash = crypto::sha256(b.keys.rsa_public_der);

  auto priv = crypto::decode_pkcs8(b.keys.rsa_private_der);
  for (std::size_t i = 0; i < CHAIN_ORDER.size(); ++i) {
    Stage stage = CHAIN_ORDER[i];
    std::string header = std::string("MicroTEE image ") + stage_name(stage);
    Bytes payload(header.begin(), header.end());
    Bytes filler = rng.bytes(64 - payload.size() % 64);
    payload.insert(payload.end(), filler.begin(), filler.end());
    Bytes vendor_key = stage == Stage::BL1 ? b.keys.rsa_public_der : Bytes{};
    b.images[i] =
        serialize_image(make_signed_image(stage, payload, *priv, vendor_key));
  }
  return b;
}

Status boot_machine(Machine& m, const BootBundle& bundle, std::uint64_t seed) {
  return m.boot(bundle.rom, bundle.images, bundle.keys, seed);
}

namespace {

void log_response(Machine& m, const char* what, ByteSpan data) {
  m.log_line(std::string(what) + " " + to_hex(data));
}

int scenario_increment(Machine& m, std::ostream& out) {
  auto r = m.smc_invoke(3, 0);
  if (!r.ok()) {
    out << "smc failed: " << error_name(r.error()) << "\n";
    return 1;
  }
  out << "smc 3 0 -> " << *r << "\n";
  if (*r != 1) return 1;

  // Bit 31 of the args register is reserved for buffer handles, so the
  // largest plain argument is 2^31 - 2.
  auto r2 = m.smc_invoke(3, 41);
  if (!r2.ok() || *r2 != 42) return 1;
  auto r3 = m.smc_invoke(3, 0x7FFF'FFFEu);
  if (!r3.ok() || *r3 != 0x7FFF'FFFFu) return 1;
  out << "increment: ok\n";
  return 0;
}

int scenario_ignored(Machine& m, std::ostream& out) {
  EventTrace& trace = m.trace();
  std::size_t sends = trace.count(EventKind::ROOT_SEND);
  std::size_t recvs = trace.count(EventKind::TA_RECV);
  auto r = m.smc_invoke(99, 1234);
  if (!r.ok()) {
    out << "smc failed: " << error_name(r.error()) << "\n";
    return 1;
  }
  out << "smc 99 1234 -> "
      << (*r == STATUS_IGNORED ? "IGNORED" : std::to_string(*r)) << "\n";
  if (*r != STATUS_IGNORED) return 1;
  if (trace.count(EventKind::ROOT_SEND) != sends ||
      trace.count(EventKind::TA_RECV) != recvs) {
    out << "a TA ran for an unknown command\n";
    return 1;
  }
  out << "ignored: ok\n";
  return 0;
}

int scenario_crypto(Machine& m, std::ostream& out) {
  Bytes payload{'a', 'b', 'c'};
  auto r1 = m.smc_invoke_payload(1, payload);
  auto r2 = m.smc_invoke_payload(1, payload);
  if (!r1.ok() || !r2.ok()) {
    out << "smc failed\n";
    return 1;
  }
  log_response(m, "blob1", r1->data);
  log_response(m, "blob2", r2->data);
  out << "blob1 len=" << r1->data.size() << " blob2 len=" << r2->data.size()
      << " distinct=" << (r1->data != r2->data ? "yes" : "no") << "\n";
  if (r1->data.empty() || r1->data.size() != r2->data.size()) return 1;
  if (r1->data == r2->data) return 1;  // fresh IV per seal
  out << "crypto: ok\n";
  return 0;
}

int scenario_attest(Machine& m, std::ostream& out) {
  auto pub = m.smc_invoke_payload(2, {});
  if (!pub.ok() || pub->data.empty()) {
    out << "no attestation public key\n";
    return 1;
  }
  log_response(m, "attest_pubkey", pub->data);
  out << "pubkey len=" << pub->data.size() << "\n";
  auto key = crypto::decode_spki(pub->data);
  if (!key.ok()) return 1;

  Bytes claims{'p', 'c', 'r', '0', '=', '7'};
  auto sig = m.smc_invoke_payload(2, claims);
  if (!sig.ok() || sig->data.empty()) return 1;
  log_response(m, "attest_sig", sig->data);

  bool good = crypto::rsa_verify(*key, claims, sig->data);
  Bytes tampered = claims;
  tampered[0] ^= 1;
  bool bad = crypto::rsa_verify(*key, tampered, sig->data);
  out << "signature len=" << sig->data.size()
      << " verified=" << (good ? "yes" : "no")
      << " tampered_verifies=" << (bad ? "yes" : "no") << "\n";
  if (!good || bad) return 1;
  out << "attest: ok\n";
  return 0;
}

int scenario_isolation(Machine& m, std::ostream& out) {
  Kernel& k = m.kernel();
  RootTask* root = m.root();
  TrustedApp* victim_app = root->ta(1);
  TcbRef victim = root->ta_tcb(3);
  if (!victim_app || victim == NULL_REF) return 1;

  // Plant a sentinel in the crypto client's shared buffer; an attack that
  // leaks through isolation would be able to clobber it.
  SharedBufDesc victim_buf = victim_app->shared;
  Bytes sentinel(victim_buf.len);
  crypto::Rng rng(0x150'1A7E);
  rng.fill(sentinel.data(), sentinel.size());
  if (!k.user_write(root->tcb, victim_buf.base, sentinel).ok()) return 1;

  const int attacks = 20;
  int contained = 0;
  for (int i = 0; i < attacks; ++i) {
    std::uint32_t vs = k.create_vspace();
    auto atk = k.create_tcb(m.untyped(), 50, vs, 0x900 + i);
    if (!atk.ok()) return 1;

    // Rotate over interesting targets; none are mapped in the attacker's
    // own address space.
    Addr target;
    switch (i % 4) {
      case 0:
        target = victim_buf.base + rng.next_below(victim_buf.len);
        break;
      case 1:  // another task's IPC buffer area (beyond our own page)
        target = IPC_BUF_VA + PAGE_SIZE + rng.next_below(16 * PAGE_SIZE);
        break;
      case 2:  // kernel objects live in low physical memory
        target = rng.next_below(UNTYPED_BASE);
        break;
      default:  // arbitrary high address
        target = 0x4000'0000u + rng.next_below(0x1000'0000u);
        break;
    }
    bool denied;
    if (i % 2 == 0) {
      denied = !k.user_read32(*atk, target).ok();
    } else {
      denied = !k.user_write32(*atk, target, 0xDEADBEEF).ok();
    }
    const TcbRecord* rec = k.tcb(*atk);
    if (denied && rec && rec->faulted) ++contained;
    k.destroy_ta(*atk);
  }
  out << "attacks=" << attacks << " contained=" << contained << "\n";
  if (contained != attacks) return 1;

  // Rights amplification must be refused too.
  TcbRef t3 = root->ta_tcb(3);
  TrustedApp* app3 = root->ta(3);
  auto widened = k.derive_capability(
      t3, app3->ep_slot, Rights{Right::SEND, Right::RECV, Right::GRANT}, 0);
  if (widened.ok()) {
    out << "rights amplification succeeded\n";
    return 1;
  }

  // The victim's buffer and behavior are intact.
  auto back = k.user_read(root->tcb, victim_buf.base, sentinel.size());
  if (!back.ok() || *back != sentinel) {
    out << "victim buffer damaged\n";
    return 1;
  }
  auto r = m.smc_invoke(3, 7);
  if (!r.ok() || *r != 8) {
    out << "victim TA damaged\n";
    return 1;
  }
  out << "isolation: ok\n";
  return 0;
}

struct ScenarioEntry {
  const char* name;
  int (*fn)(Machine&, std::ostream&);
};

constexpr ScenarioEntry SCENARIOS[] = {
    {"increment", scenario_increment}, {"ignored", scenario_ignored},
    {"crypto", scenario_crypto},       {"attest", scenario_attest},
    {"isolation", scenario_isolation},
};

}  // namespace

bool scenario_exists(const std::string& name) {
  for (const auto& s : SCENARIOS) {
    if (name == s.name) return true;
  }
  return false;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : SCENARIOS) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

int run_scenario(Machine& m, const std::string& name, std::ostream& out) {
  for (const auto& s : SCENARIOS) {
    if (name == s.name) return s.fn(m, out);
  }
  out << "unknown scenario: " << name << "\n";
  return 2;
}

}  // namespace microtee
