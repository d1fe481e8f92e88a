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

#include "microtee/keyfile.hpp"

#include <cstring>
#include <fstream>

#include "microtee/crypto/rsa.hpp"

namespace microtee {

Bytes serialize_keyfile(const KeyFile& kf) {
  Bytes out;
  out.insert(out.end(), KEYFILE_MAGIC, KEYFILE_MAGIC + sizeof(KEYFILE_MAGIC));
  out.push_back(KEYFILE_VERSION);
  out.insert(out.end(), kf.root_key.begin(), kf.root_key.end());
  put_be32(out, static_cast<std::uint32_t>(kf.rsa_private_der.size()));
  out.insert(out.end(), kf.rsa_private_der.begin(), kf.rsa_private_der.end());
  put_be32(out, static_cast<std::uint32_t>(kf.rsa_public_der.size()));
  out.insert(out.end(), kf.rsa_public_der.begin(), kf.rsa_public_der.end());
  return out;
}

Result<KeyFile> parse_keyfile(ByteSpan data) {
  std::size_t pos = 0;
  auto need = [&](std::size_t n) { return pos + n <= data.size(); };

  if (!need(sizeof(KEYFILE_MAGIC)) ||
      std::memcmp(data.data(), KEYFILE_MAGIC, sizeof(KEYFILE_MAGIC)) != 0) {
    return ErrorCode::PARSE_ERROR;
  }
  pos += sizeof(KEYFILE_MAGIC);
  if (!need(1) || data[pos] != KEYFILE_VERSION) return ErrorCode::PARSE_ERROR;
  pos += 1;

  KeyFile kf;
  if (!need(kf.root_key.size())) return ErrorCode::PARSE_ERROR;
  std::memcpy(kf.root_key.data(), data.data() + pos, kf.root_key.size());
  pos += kf.root_key.size();

  auto read_blob = [&](Bytes& out) -> bool {
    if (!need(4)) return false;
    std::uint32_t len = get_be32(data.data() + pos);
    pos += 4;
    if (!need(len)) return false;
    out.assign(data.begin() + pos, data.begin() + pos + len);
    pos += len;
    return true;
  };
  if (!read_blob(kf.rsa_private_der) || !read_blob(kf.rsa_public_der)) {
    return ErrorCode::PARSE_ERROR;
  }
  if (pos != data.size()) return ErrorCode::PARSE_ERROR;  // trailing junk
  return kf;
}

Result<Bytes> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return ErrorCode::IO_ERROR;
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) return ErrorCode::IO_ERROR;
  return data;
}

Status write_file(const std::string& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return ErrorCode::IO_ERROR;
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  return out ? Status() : Status(ErrorCode::IO_ERROR);
}

Result<KeyFile> load_keyfile(const std::string& path) {
  auto data = read_file(path);
  if (!data.ok()) return data.error();
  return parse_keyfile(*data);
}

Status save_keyfile(const std::string& path, const KeyFile& kf) {
  return write_file(path, serialize_keyfile(kf));
}

KeyFile provision_keys(crypto::Rng& rng) {
  KeyFile kf;
  rng.fill(kf.root_key.data(), kf.root_key.size());
  crypto::RsaKeyPair pair = crypto::rsa_generate(rng, 2048);
  kf.rsa_private_der = crypto::encode_pkcs8(pair.priv);
  kf.rsa_public_der = crypto::encode_spki(pair.pub);
  return kf;
}

}  // namespace microtee
