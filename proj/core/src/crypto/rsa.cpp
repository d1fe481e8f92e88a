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

#include "microtee/crypto/rsa.hpp"

#include <cassert>
#include <cstring>

#include "microtee/crypto/sha256.hpp"

namespace microtee::crypto {
namespace {

constexpr unsigned long PUBLIC_EXPONENT = 65537;

// DigestInfo header for SHA-256, per PKCS#1 v1.5.
constexpr std::uint8_t SHA256_DIGEST_INFO[] = {
    0x30, 0x31, 0x30, 0x0d, 0x06, 0x09, 0x60, 0x86, 0x48, 0x01,
    0x65, 0x03, 0x04, 0x02, 0x01, 0x05, 0x00, 0x04, 0x20};

// EMSA-PKCS1-v1_5 encoding of sha256(message), k = modulus length.
Bytes emsa_encode(ByteSpan message, std::size_t k) {
  Digest256 digest = sha256(message);
  const std::size_t t_len = sizeof(SHA256_DIGEST_INFO) + digest.size();
  assert(k >= t_len + 11);

  Bytes em(k, 0xff);
  em[0] = 0x00;
  em[1] = 0x01;
  em[k - t_len - 1] = 0x00;
  std::memcpy(&em[k - t_len], SHA256_DIGEST_INFO, sizeof(SHA256_DIGEST_INFO));
  std::memcpy(&em[k - digest.size()], digest.data(), digest.size());
  return em;
}

// Random prime of exactly `bits` bits with gcd(p - 1, e) = 1. Top two bits
// are forced so the product of two such primes has full length.
mpz_class random_prime(Rng& rng, unsigned bits) {
  assert(bits % 8 == 0);
  for (;;) {
    Bytes raw = rng.bytes(bits / 8);
    raw[0] |= 0xc0;
    raw[bits / 8 - 1] |= 0x01;
    mpz_class p = bytes_to_mpz(raw);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mpz_sizeinbase(p.get_mpz_t(), 2) != bits) continue;
    mpz_class rem = (p - 1) % PUBLIC_EXPONENT;
    if (rem == 0) continue;
    return p;
  }
}

}  // namespace

Bytes mpz_to_bytes(const mpz_class& v) {
  if (v == 0) return {};
  std::size_t count = 0;
  Bytes out((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

Bytes mpz_to_fixed(const mpz_class& v, std::size_t len) {
  Bytes mag = mpz_to_bytes(v);
  assert(mag.size() <= len);
  Bytes out(len, 0);
  std::memcpy(out.data() + (len - mag.size()), mag.data(), mag.size());
  return out;
}

mpz_class bytes_to_mpz(ByteSpan data) {
  mpz_class v;
  if (!data.empty())
    mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

RsaKeyPair rsa_generate(Rng& rng, unsigned bits) {
  assert(bits == 1024 || bits == 2048);
  for (;;) {
    mpz_class p = random_prime(rng, bits / 2);
    mpz_class q = random_prime(rng, bits / 2);
    if (p == q) continue;
    if (p < q) std::swap(p, q);  // CRT below wants p > q convention

    mpz_class n = p * q;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) != bits) continue;

    mpz_class e = PUBLIC_EXPONENT;
    mpz_class phi = (p - 1) * (q - 1);
    mpz_class d;
    if (mpz_invert(d.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t()) == 0)
      continue;

    RsaPrivateKey priv;
    priv.n = n;
    priv.e = e;
    priv.d = d;
    priv.p = p;
    priv.q = q;
    priv.dp = d % (p - 1);
    priv.dq = d % (q - 1);
    mpz_invert(priv.qinv.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    return RsaKeyPair{priv, priv.public_key()};
  }
}

Bytes rsa_sign(const RsaPrivateKey& key, ByteSpan message) {
  const std::size_t k = key.modulus_bytes();
  mpz_class em = bytes_to_mpz(emsa_encode(message, k));

  // CRT exponentiation.
  mpz_class m1, m2;
  mpz_powm(m1.get_mpz_t(), em.get_mpz_t(), key.dp.get_mpz_t(),
           key.p.get_mpz_t());
  mpz_powm(m2.get_mpz_t(), em.get_mpz_t(), key.dq.get_mpz_t(),
           key.q.get_mpz_t());
  mpz_class h = (key.qinv * (m1 - m2)) % key.p;
  if (h < 0) h += key.p;
  mpz_class s = m2 + h * key.q;

  return mpz_to_fixed(s, k);
}

bool rsa_verify(const RsaPublicKey& key, ByteSpan message, ByteSpan signature) {
  const std::size_t k = key.modulus_bytes();
  if (signature.size() != k) return false;

  mpz_class s = bytes_to_mpz(signature);
  if (s >= key.n) return false;

  mpz_class m;
  mpz_powm(m.get_mpz_t(), s.get_mpz_t(), key.e.get_mpz_t(), key.n.get_mpz_t());

  // Encode-then-compare sidesteps padding parser pitfalls.
  Bytes expected = emsa_encode(message, k);
  Bytes actual = mpz_to_fixed(m, k);
  return actual == expected;
}

}  // namespace microtee::crypto
