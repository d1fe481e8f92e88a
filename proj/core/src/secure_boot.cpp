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

#include "microtee/secure_boot.hpp"

#include <cstring>

#include <fmt/format.h>

namespace microtee {

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::BL1: return "BL1";
    case Stage::SECURE_OS: return "SECURE_OS";
    case Stage::BL2: return "BL2";
    case Stage::MOBILE_OS: return "MOBILE_OS";
    case Stage::ROOT_TASK: return "ROOT_TASK";
  }
  return "?";
}

namespace {

bool valid_stage(std::uint8_t tag) { return tag >= 1 && tag <= 5; }

}  // namespace

Bytes image_signed_region(Stage stage, const Bytes& payload) {
  Bytes region;
  region.insert(region.end(), IMAGE_MAGIC, IMAGE_MAGIC + sizeof(IMAGE_MAGIC));
  region.push_back(static_cast<std::uint8_t>(stage));
  put_be32(region, static_cast<std::uint32_t>(payload.size()));
  region.insert(region.end(), payload.begin(), payload.end());
  return region;
}

Bytes serialize_image(const SignedImage& img) {
  Bytes out = image_signed_region(img.stage_tag, img.payload);
  put_be32(out, static_cast<std::uint32_t>(img.pubkey.size()));
  out.insert(out.end(), img.pubkey.begin(), img.pubkey.end());
  out.insert(out.end(), img.signature.begin(), img.signature.end());
  return out;
}

Result<SignedImage> parse_image(ByteSpan data) {
  std::size_t pos = 0;
  auto need = [&](std::size_t n) { return pos + n <= data.size(); };

  if (!need(sizeof(IMAGE_MAGIC)) ||
      std::memcmp(data.data(), IMAGE_MAGIC, sizeof(IMAGE_MAGIC)) != 0) {
    return ErrorCode::MALFORMED;
  }
  pos += sizeof(IMAGE_MAGIC);

  if (!need(1) || !valid_stage(data[pos])) return ErrorCode::MALFORMED;
  SignedImage img;
  img.stage_tag = static_cast<Stage>(data[pos]);
  pos += 1;

  if (!need(4)) return ErrorCode::MALFORMED;
  std::uint32_t payload_len = get_be32(data.data() + pos);
  pos += 4;
  if (!need(payload_len)) return ErrorCode::MALFORMED;
  img.payload.assign(data.begin() + pos, data.begin() + pos + payload_len);
  pos += payload_len;

  if (!need(4)) return ErrorCode::MALFORMED;
  std::uint32_t pubkey_len = get_be32(data.data() + pos);
  pos += 4;
  if (!need(pubkey_len)) return ErrorCode::MALFORMED;
  img.pubkey.assign(data.begin() + pos, data.begin() + pos + pubkey_len);
  pos += pubkey_len;

  if (!need(IMAGE_SIG_SIZE)) return ErrorCode::MALFORMED;
  img.signature.assign(data.begin() + pos, data.begin() + pos + IMAGE_SIG_SIZE);
  pos += IMAGE_SIG_SIZE;

  if (pos != data.size()) return ErrorCode::MALFORMED;  // trailing bytes
  return img;
}

SignedImage make_signed_image(Stage stage, ByteSpan payload,
                              const crypto::RsaPrivateKey& key,
                              ByteSpan embed_pubkey) {
  SignedImage img;
  img.stage_tag = stage;
  img.payload.assign(payload.begin(), payload.end());
  img.pubkey.assign(embed_pubkey.begin(), embed_pubkey.end());
  Bytes region = image_signed_region(stage, img.payload);
  img.signature = crypto::rsa_sign(key, region);
  return img;
}

bool verify_image(const crypto::RsaPublicKey& pubkey, const SignedImage& img) {
  Bytes region = image_signed_region(img.stage_tag, img.payload);
  return crypto::rsa_verify(pubkey, region, img.signature);
}

Result<crypto::RsaPublicKey> rom_verify(const RomState& rom, ByteSpan bl1_raw) {
  auto img = parse_image(bl1_raw);
  if (!img.ok()) return img.error();
  if (img->stage_tag != Stage::BL1) return ErrorCode::MALFORMED;
  if (img->pubkey.empty()) return ErrorCode::MALFORMED;

  // First the hash of the embedded public key, then the signature under it.
  if (crypto::sha256(img->pubkey) != rom.pubkey_hash) {
    return ErrorCode::PUBKEY_HASH_MISMATCH;
  }
  auto pubkey = crypto::decode_spki(img->pubkey);
  if (!pubkey.ok()) return ErrorCode::MALFORMED;
  if (!verify_image(*pubkey, *img)) return ErrorCode::BAD_SIGNATURE;
  return *pubkey;
}

namespace {

Status verify_stage(const crypto::RsaPublicKey& pubkey, Stage expected,
                    ByteSpan raw) {
  auto img = parse_image(raw);
  if (!img.ok()) return Status(img.error());
  if (img->stage_tag != expected) return Status(ErrorCode::MALFORMED);
  if (!verify_image(pubkey, *img)) return Status(ErrorCode::BAD_SIGNATURE);
  return Status();
}

}  // namespace

Status kernel_verify_root_task(const crypto::RsaPublicKey& pubkey,
                               ByteSpan root_task_raw) {
  return verify_stage(pubkey, Stage::ROOT_TASK, root_task_raw);
}

BootReport boot_chain(const RomState& rom, const std::array<Bytes, 5>& images,
                      EventTrace& trace) {
  BootReport report;
  auto record = [&](Stage stage, Status st) -> bool {
    StageResult res{stage, st.ok(), st.ok() ? ErrorCode::OK : st.error()};
    report.stages.push_back(res);
    trace.emit(res.ok ? EventKind::BOOT_STAGE_OK : EventKind::BOOT_STAGE_FAIL,
               static_cast<Word>(stage), static_cast<Word>(res.reason));
    if (!res.ok) report.halted_at = stage;
    return res.ok;
  };

  auto pubkey = rom_verify(rom, images[0]);
  if (!record(Stage::BL1, pubkey.ok() ? Status() : Status(pubkey.error()))) {
    return report;
  }
  if (!record(Stage::SECURE_OS, verify_stage(*pubkey, Stage::SECURE_OS,
                                             images[1]))) {
    return report;
  }
  if (!record(Stage::BL2, verify_stage(*pubkey, Stage::BL2, images[2]))) {
    return report;
  }
  if (!record(Stage::ROOT_TASK,
              kernel_verify_root_task(*pubkey, images[3]))) {
    return report;
  }
  report.secure_ready = true;
  if (!record(Stage::MOBILE_OS, verify_stage(*pubkey, Stage::MOBILE_OS,
                                             images[4]))) {
    return report;
  }
  report.booted = true;
  return report;
}

std::string BootReport::render() const {
  std::string out;
  for (const StageResult& s : stages) {
    out += fmt::format("{}: {}\n", stage_name(s.stage),
                       s.ok ? "ok" : error_name(s.reason));
  }
  if (booted) {
    out += "BOOTED\n";
  } else if (halted_at) {
    out += fmt::format("HALTED_AT({})\n", stage_name(*halted_at));
  }
  return out;
}

}  // namespace microtee
