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

#include "microtee/services.hpp"

#include <cstring>

#include "microtee/crypto/aes128.hpp"
#include "microtee/crypto/hmac.hpp"

namespace microtee {
namespace {

// Label mixed into the Root Key hash that yields the sealing tag key.
constexpr char SEAL_TAG_LABEL[] = "MTEE-SEAL-TAG-V1";

ServiceResponse err(ErrorCode code) {
  ServiceResponse resp;
  resp.status = code;
  return resp;
}

ServiceResponse ok(Bytes payload) {
  ServiceResponse resp;
  resp.payload = std::move(payload);
  return resp;
}

}  // namespace

Bytes serialize_sealed(const SealedBlob& blob) {
  Bytes out;
  out.push_back(blob.version);
  out.insert(out.end(), blob.iv.begin(), blob.iv.end());
  out.insert(out.end(), blob.ciphertext.begin(), blob.ciphertext.end());
  out.insert(out.end(), blob.integrity_tag.begin(), blob.integrity_tag.end());
  return out;
}

Result<SealedBlob> parse_sealed(ByteSpan data) {
  if (data.size() < SEALED_BLOB_MIN_SIZE) return ErrorCode::INTEGRITY_FAIL;
  std::size_t ct_len = data.size() - 1 - 16 - 32;
  if (ct_len % 16 != 0) return ErrorCode::INTEGRITY_FAIL;
  SealedBlob blob;
  blob.version = data[0];
  if (blob.version != SEALED_BLOB_VERSION) return ErrorCode::INTEGRITY_FAIL;
  std::memcpy(blob.iv.data(), data.data() + 1, 16);
  blob.ciphertext.assign(data.begin() + 17, data.begin() + 17 + ct_len);
  std::memcpy(blob.integrity_tag.data(), data.data() + 17 + ct_len, 32);
  return blob;
}

// --- server loop -----------------------------------------------------------

void serve_requests(Kernel& kernel, TcbRef tcb, CapSlot ep_slot,
                    const std::function<ServiceResponse(const ServiceRequest&)>&
                        handler) {
  EventTrace& trace = kernel.trace();
  for (;;) {
    TcbRecord* self = kernel.tcb(tcb);
    if (!self || self->faulted) return;
    if (!self->pending_recv) {
      auto r = kernel.ipc_recv(tcb, ep_slot);
      if (!r.ok() || *r == IpcOutcome::BLOCKED) return;
    }
    Message req_msg = *kernel.take_message(tcb);
    trace.emit(EventKind::SVC_REQUEST, req_msg.label, req_msg.badge);

    ServiceRequest req;
    req.service_id = req_msg.label;
    req.shared = req_msg.shared_buf;
    std::size_t nbytes = req_msg.words.empty() ? 0 : req_msg.words[0];

    ServiceResponse resp;
    bool transport_ok = true;
    if (req.shared) {
      // The descriptor was validated against the sender's vspace by the
      // kernel; check our own mapping before touching it so a hostile
      // descriptor cannot fault this service.
      VSpace* vs = kernel.vspace(self->vspace_id);
      if (nbytes > req.shared->len ||
          (nbytes > 0 && !vs->maps_range(req.shared->base, nbytes, Perm::R))) {
        resp = err(ErrorCode::BAD_ARGUMENT);
        transport_ok = false;
      } else if (nbytes > 0) {
        auto data = kernel.user_read(tcb, req.shared->base, nbytes);
        if (!data.ok()) return;  // faulted; root task will clean up
        req.payload = std::move(*data);
      }
    } else {
      req.payload = words_to_bytes(
          std::vector<Word>(req_msg.words.begin() + 1, req_msg.words.end()),
          nbytes);
    }

    if (transport_ok) resp = handler(req);

    Message reply;
    if (req.shared && resp.status == ErrorCode::OK) {
      if (resp.payload.size() > req.shared->len ||
          !kernel.vspace(self->vspace_id)
               ->maps_range(req.shared->base,
                            std::max<std::size_t>(resp.payload.size(), 1),
                            Perm::W)) {
        reply = encode_response_header(ErrorCode::BAD_ARGUMENT, 0, false, {});
      } else {
        if (!resp.payload.empty()) {
          kernel.user_write(tcb, req.shared->base, resp.payload);
        }
        reply = encode_response_header(ErrorCode::OK, resp.payload.size(),
                                       false, {});
      }
    } else if (resp.status == ErrorCode::OK &&
               resp.payload.size() <= MAX_INLINE_BYTES - 4) {
      reply = encode_response_header(ErrorCode::OK, resp.payload.size(), true,
                                     resp.payload);
    } else if (resp.status == ErrorCode::OK) {
      reply = encode_response_header(ErrorCode::MSG_TOO_LONG, 0, false, {});
    } else {
      reply = encode_response_header(resp.status, 0, false, {});
    }

    trace.emit(EventKind::SVC_REPLY, req.service_id,
               static_cast<Word>(resp.status));
    auto sent = kernel.ipc_reply(tcb, reply);
    if (!sent.ok()) return;
  }
}

// --- Crypto Service --------------------------------------------------------

CryptoService::CryptoService(Kernel& kernel, std::uint64_t rng_seed)
    : kernel_(kernel), rng_(rng_seed) {}

const crypto::RsaKeyPair& CryptoService::bench_key(unsigned bits) {
  auto& slot = bits == 1024 ? rsa1024_ : rsa2048_;
  if (!slot) slot = crypto::rsa_generate(rng_, bits);
  return *slot;
}

void CryptoService::resume(Machine&) {
  serve_requests(kernel_, tcb, ep_slot_,
                 [this](const ServiceRequest& req) { return handle(req); });
}

namespace {

struct AesParams {
  std::array<std::uint8_t, 16> key;
  std::array<std::uint8_t, 16> iv;
  ByteSpan data;
};

Result<AesParams> parse_aes_payload(ByteSpan p) {
  if (p.empty()) return ErrorCode::BAD_ARGUMENT;
  std::size_t key_len = p[0];
  if (key_len != 16) return ErrorCode::BAD_KEY_LEN;
  if (p.size() < 1 + key_len + 16 + 1) return ErrorCode::BAD_ARGUMENT;
  AesParams out;
  std::memcpy(out.key.data(), p.data() + 1, 16);
  std::memcpy(out.iv.data(), p.data() + 17, 16);
  out.data = p.subspan(33);
  return out;
}

// CBC encryption is a serial chain, so on large inputs every block load
// stalls on memory once the data falls out of cache. Stage the input
// through a cache-sized window; the chaining IV carries across windows,
// so the output is byte-identical to a single pass.
constexpr std::size_t AES_WINDOW = 64 * 1024;

Bytes cbc_encrypt_windowed(const std::uint8_t key[16],
                           const std::uint8_t iv[16], ByteSpan pt) {
  if (pt.size() <= AES_WINDOW) return crypto::aes128_cbc_encrypt(key, iv, pt);
  Bytes out;
  out.reserve(pt.size() + 16);
  std::array<std::uint8_t, 16> chain;
  std::memcpy(chain.data(), iv, 16);
  std::size_t off = 0;
  Bytes window(AES_WINDOW);
  while (pt.size() - off > AES_WINDOW) {
    std::memcpy(window.data(), pt.data() + off, AES_WINDOW);
    Bytes ct = crypto::aes128_cbc_encrypt_nopad(key, chain.data(), window);
    std::memcpy(chain.data(), ct.data() + ct.size() - 16, 16);
    out.insert(out.end(), ct.begin(), ct.end());
    off += AES_WINDOW;
  }
  Bytes tail(pt.begin() + off, pt.end());
  Bytes ct = crypto::aes128_cbc_encrypt(key, chain.data(), tail);
  out.insert(out.end(), ct.begin(), ct.end());
  return out;
}

}  // namespace

ServiceResponse CryptoService::handle(const ServiceRequest& req) {
  switch (req.service_id) {
    case SVC_AES_ENC: {
      auto params = parse_aes_payload(req.payload);
      if (!params.ok()) return err(params.error());
      return ok(cbc_encrypt_windowed(params->key.data(), params->iv.data(),
                                     params->data));
    }
    case SVC_AES_DEC: {
      auto params = parse_aes_payload(req.payload);
      if (!params.ok()) return err(params.error());
      auto pt = crypto::aes128_cbc_decrypt(params->key.data(), params->iv.data(),
                                           params->data);
      if (!pt.ok()) return err(pt.error());
      return ok(std::move(*pt));
    }
    case SVC_SHA256: {
      crypto::Digest256 d = crypto::sha256(req.payload);
      return ok(Bytes(d.begin(), d.end()));
    }
    case SVC_RSA_SIGN: {
      if (req.payload.size() < 4) return err(ErrorCode::BAD_ARGUMENT);
      std::uint32_t bits = get_be32(req.payload.data());
      if (bits != 1024 && bits != 2048) return err(ErrorCode::BAD_KEY);
      ByteSpan data(req.payload.data() + 4, req.payload.size() - 4);
      return ok(crypto::rsa_sign(bench_key(bits).priv, data));
    }
    case SVC_RSA_VERIFY: {
      if (req.payload.size() < 8) return err(ErrorCode::BAD_ARGUMENT);
      std::uint32_t bits = get_be32(req.payload.data());
      if (bits != 1024 && bits != 2048) return err(ErrorCode::BAD_KEY);
      std::uint32_t sig_len = get_be32(req.payload.data() + 4);
      if (req.payload.size() < 8 + sig_len) return err(ErrorCode::BAD_ARGUMENT);
      ByteSpan sig(req.payload.data() + 8, sig_len);
      ByteSpan data(req.payload.data() + 8 + sig_len,
                    req.payload.size() - 8 - sig_len);
      bool good = crypto::rsa_verify(bench_key(bits).pub, data, sig);
      return ok(Bytes{static_cast<std::uint8_t>(good ? 1 : 0)});
    }
    case SVC_ECHO:
      return ok(req.payload);
    default:
      return err(ErrorCode::UNKNOWN_SERVICE_ID);
  }
}

// --- Key Management --------------------------------------------------------

KeyManagementService::KeyManagementService(Kernel& kernel,
                                           std::uint64_t rng_seed,
                                           const KeyFile& keys)
    : kernel_(kernel), rng_(rng_seed) {
  root_key_ = keys.root_key;

  Bytes label_input(SEAL_TAG_LABEL, SEAL_TAG_LABEL + sizeof(SEAL_TAG_LABEL) - 1);
  label_input.insert(label_input.end(), root_key_.begin(), root_key_.end());
  seal_tag_key_ = crypto::sha256(label_input);

  auto priv = crypto::decode_pkcs8(keys.rsa_private_der);
  if (priv.ok()) {
    device_priv_ = std::move(*priv);
    device_pub_der_ = keys.rsa_public_der;
    device_key_ok_ = true;
  }
}

void KeyManagementService::resume(Machine&) {
  serve_requests(kernel_, tcb, ep_slot_,
                 [this](const ServiceRequest& req) { return handle(req); });
}

Bytes KeyManagementService::seal(ByteSpan data) {
  SealedBlob blob;
  blob.version = SEALED_BLOB_VERSION;
  rng_.fill(blob.iv.data(), blob.iv.size());
  blob.ciphertext = crypto::aes128_cbc_encrypt(root_key_.data(), blob.iv.data(), data);

  Bytes tag_input(blob.iv.begin(), blob.iv.end());
  tag_input.insert(tag_input.end(), blob.ciphertext.begin(),
                   blob.ciphertext.end());
  blob.integrity_tag = crypto::hmac_sha256(seal_tag_key_, tag_input);
  return serialize_sealed(blob);
}

Result<Bytes> KeyManagementService::unseal(ByteSpan blob_bytes) {
  auto blob = parse_sealed(blob_bytes);
  if (!blob.ok()) return ErrorCode::INTEGRITY_FAIL;

  Bytes tag_input(blob->iv.begin(), blob->iv.end());
  tag_input.insert(tag_input.end(), blob->ciphertext.begin(),
                   blob->ciphertext.end());
  crypto::Digest256 expect = crypto::hmac_sha256(seal_tag_key_, tag_input);
  if (!crypto::digests_equal(expect, blob->integrity_tag)) {
    return ErrorCode::INTEGRITY_FAIL;
  }
  auto pt = crypto::aes128_cbc_decrypt(root_key_.data(), blob->iv.data(), blob->ciphertext);
  // Padding damage with a valid tag cannot happen; map any decrypt error
  // to the single tamper-detection error anyway.
  if (!pt.ok()) return ErrorCode::INTEGRITY_FAIL;
  return *pt;
}

ServiceResponse KeyManagementService::handle(const ServiceRequest& req) {
  switch (req.service_id) {
    case SVC_SEAL: {
      if (req.payload.empty() || req.payload.size() > MAX_SEAL_BYTES) {
        return err(ErrorCode::BAD_ARGUMENT);
      }
      return ok(seal(req.payload));
    }
    case SVC_UNSEAL: {
      auto data = unseal(req.payload);
      if (!data.ok()) return err(data.error());
      return ok(std::move(*data));
    }
    case SVC_ATTEST: {
      if (req.payload.empty()) return err(ErrorCode::BAD_ARGUMENT);
      if (!device_key_ok_) return err(ErrorCode::BAD_KEY);
      return ok(crypto::rsa_sign(device_priv_, req.payload));
    }
    case SVC_GET_ATTEST_PUBKEY:
      if (!device_key_ok_) return err(ErrorCode::BAD_KEY);
      return ok(device_pub_der_);
    default:
      return err(ErrorCode::UNKNOWN_SERVICE_ID);
  }
}

}  // namespace microtee
