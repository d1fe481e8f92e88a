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

// Just enough DER for RSA key interchange: PKCS#8 PrivateKeyInfo and
// SubjectPublicKeyInfo, rsaEncryption only.

#include <cstdint>

#include "microtee/crypto/rsa.hpp"

namespace microtee::crypto {
namespace {

constexpr std::uint8_t TAG_INTEGER = 0x02;
constexpr std::uint8_t TAG_BIT_STRING = 0x03;
constexpr std::uint8_t TAG_OCTET_STRING = 0x04;
constexpr std::uint8_t TAG_NULL = 0x05;
constexpr std::uint8_t TAG_OID = 0x06;
constexpr std::uint8_t TAG_SEQUENCE = 0x30;

// rsaEncryption = 1.2.840.113549.1.1.1
constexpr std::uint8_t RSA_OID[] = {0x2a, 0x86, 0x48, 0x86, 0xf7,
                                    0x0d, 0x01, 0x01, 0x01};

void put_len(Bytes& out, std::size_t len) {
  if (len < 0x80) {
    out.push_back(static_cast<std::uint8_t>(len));
    return;
  }
  std::uint8_t tmp[8];
  int n = 0;
  while (len) {
    tmp[n++] = static_cast<std::uint8_t>(len);
    len >>= 8;
  }
  out.push_back(static_cast<std::uint8_t>(0x80 | n));
  while (n) out.push_back(tmp[--n]);
}

void put_tlv(Bytes& out, std::uint8_t tag, ByteSpan body) {
  out.push_back(tag);
  put_len(out, body.size());
  out.insert(out.end(), body.begin(), body.end());
}

void put_integer(Bytes& out, const mpz_class& v) {
  Bytes mag = mpz_to_bytes(v);
  if (mag.empty() || (mag[0] & 0x80)) mag.insert(mag.begin(), 0x00);
  put_tlv(out, TAG_INTEGER, mag);
}

Bytes algorithm_identifier() {
  Bytes body;
  put_tlv(body, TAG_OID, RSA_OID);
  put_tlv(body, TAG_NULL, {});
  Bytes out;
  put_tlv(out, TAG_SEQUENCE, body);
  return out;
}

// Cursor over a DER byte string. All reads are bounds checked.
class Reader {
 public:
  explicit Reader(ByteSpan data) : p_(data.data()), end_(data.data() + data.size()) {}

  bool done() const { return p_ == end_; }

  bool read_tlv(std::uint8_t expect_tag, ByteSpan& body) {
    if (end_ - p_ < 2 || *p_ != expect_tag) return false;
    ++p_;
    std::size_t len = 0;
    std::uint8_t first = *p_++;
    if (first < 0x80) {
      len = first;
    } else {
      int n = first & 0x7f;
      if (n == 0 || n > 4 || end_ - p_ < n) return false;
      for (int i = 0; i < n; ++i) len = (len << 8) | *p_++;
    }
    if (static_cast<std::size_t>(end_ - p_) < len) return false;
    body = ByteSpan(p_, len);
    p_ += len;
    return true;
  }

  bool read_integer(mpz_class& v) {
    ByteSpan body;
    if (!read_tlv(TAG_INTEGER, body) || body.empty()) return false;
    if (body[0] & 0x80) return false;  // negative: not valid in a key
    v = bytes_to_mpz(body);
    return true;
  }

 private:
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

bool read_algorithm_identifier(Reader& r) {
  ByteSpan alg;
  if (!r.read_tlv(TAG_SEQUENCE, alg)) return false;
  Reader ar(alg);
  ByteSpan oid;
  if (!ar.read_tlv(TAG_OID, oid)) return false;
  if (oid.size() != sizeof(RSA_OID) ||
      !std::equal(oid.begin(), oid.end(), RSA_OID))
    return false;
  // Parameters must be absent or NULL.
  if (!ar.done()) {
    ByteSpan null_body;
    if (!ar.read_tlv(TAG_NULL, null_body) || !null_body.empty()) return false;
  }
  return ar.done();
}

}  // namespace

Bytes encode_pkcs8(const RsaPrivateKey& key) {
  Bytes rsa_key;
  put_integer(rsa_key, 0);  // two-prime form
  put_integer(rsa_key, key.n);
  put_integer(rsa_key, key.e);
  put_integer(rsa_key, key.d);
  put_integer(rsa_key, key.p);
  put_integer(rsa_key, key.q);
  put_integer(rsa_key, key.dp);
  put_integer(rsa_key, key.dq);
  put_integer(rsa_key, key.qinv);
  Bytes rsa_seq;
  put_tlv(rsa_seq, TAG_SEQUENCE, rsa_key);

  Bytes info;
  put_integer(info, 0);  // PrivateKeyInfo version
  Bytes alg = algorithm_identifier();
  info.insert(info.end(), alg.begin(), alg.end());
  put_tlv(info, TAG_OCTET_STRING, rsa_seq);

  Bytes out;
  put_tlv(out, TAG_SEQUENCE, info);
  return out;
}

Result<RsaPrivateKey> decode_pkcs8(ByteSpan der) {
  Reader top(der);
  ByteSpan info;
  if (!top.read_tlv(TAG_SEQUENCE, info) || !top.done())
    return ErrorCode::PARSE_ERROR;

  Reader ir(info);
  mpz_class version;
  if (!ir.read_integer(version) || version != 0) return ErrorCode::PARSE_ERROR;
  if (!read_algorithm_identifier(ir)) return ErrorCode::PARSE_ERROR;

  ByteSpan octets;
  if (!ir.read_tlv(TAG_OCTET_STRING, octets)) return ErrorCode::PARSE_ERROR;

  Reader kr(octets);
  ByteSpan rsa_seq;
  if (!kr.read_tlv(TAG_SEQUENCE, rsa_seq) || !kr.done())
    return ErrorCode::PARSE_ERROR;

  Reader rr(rsa_seq);
  RsaPrivateKey key;
  mpz_class key_version;
  if (!rr.read_integer(key_version) || key_version != 0)
    return ErrorCode::PARSE_ERROR;
  if (!rr.read_integer(key.n) || !rr.read_integer(key.e) ||
      !rr.read_integer(key.d) || !rr.read_integer(key.p) ||
      !rr.read_integer(key.q) || !rr.read_integer(key.dp) ||
      !rr.read_integer(key.dq) || !rr.read_integer(key.qinv))
    return ErrorCode::PARSE_ERROR;
  if (key.n == 0 || key.e == 0 || key.d == 0) return ErrorCode::PARSE_ERROR;
  return key;
}

Bytes encode_spki(const RsaPublicKey& key) {
  Bytes rsa_pub;
  put_integer(rsa_pub, key.n);
  put_integer(rsa_pub, key.e);
  Bytes rsa_seq;
  put_tlv(rsa_seq, TAG_SEQUENCE, rsa_pub);

  Bytes bitstr;
  bitstr.push_back(0x00);  // no unused bits
  bitstr.insert(bitstr.end(), rsa_seq.begin(), rsa_seq.end());

  Bytes info = algorithm_identifier();
  put_tlv(info, TAG_BIT_STRING, bitstr);

  Bytes out;
  put_tlv(out, TAG_SEQUENCE, info);
  return out;
}

Result<RsaPublicKey> decode_spki(ByteSpan der) {
  Reader top(der);
  ByteSpan info;
  if (!top.read_tlv(TAG_SEQUENCE, info) || !top.done())
    return ErrorCode::PARSE_ERROR;

  Reader ir(info);
  if (!read_algorithm_identifier(ir)) return ErrorCode::PARSE_ERROR;

  ByteSpan bitstr;
  if (!ir.read_tlv(TAG_BIT_STRING, bitstr) || bitstr.empty() || bitstr[0] != 0)
    return ErrorCode::PARSE_ERROR;

  Reader br(bitstr.subspan(1));
  ByteSpan rsa_seq;
  if (!br.read_tlv(TAG_SEQUENCE, rsa_seq) || !br.done())
    return ErrorCode::PARSE_ERROR;

  Reader rr(rsa_seq);
  RsaPublicKey key;
  if (!rr.read_integer(key.n) || !rr.read_integer(key.e) || !rr.done())
    return ErrorCode::PARSE_ERROR;
  if (key.n == 0 || key.e == 0) return ErrorCode::PARSE_ERROR;
  return key;
}

}  // namespace microtee::crypto
