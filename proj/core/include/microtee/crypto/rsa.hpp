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

#include <gmpxx.h>

#include <cstdint>

#include "microtee/crypto/rng.hpp"
#include "microtee/result.hpp"
#include "microtee/words.hpp"

namespace microtee::crypto {

// RSA with PKCS#1 v1.5 signatures over SHA-256. Supports 1024 and 2048 bit
// moduli, matching what the simulated device provisions and benchmarks.
// Bignum arithmetic is GMP; padding, DER and key generation live here.

struct RsaPublicKey {
  mpz_class n;
  mpz_class e;

  std::size_t modulus_bytes() const {
    return (mpz_sizeinbase(n.get_mpz_t(), 2) + 7) / 8;
  }
};

struct RsaPrivateKey {
  mpz_class n, e, d, p, q, dp, dq, qinv;

  RsaPublicKey public_key() const { return RsaPublicKey{n, e}; }
  std::size_t modulus_bytes() const {
    return (mpz_sizeinbase(n.get_mpz_t(), 2) + 7) / 8;
  }
};

struct RsaKeyPair {
  RsaPrivateKey priv;
  RsaPublicKey pub;
};

// Deterministic key generation: the same rng state always yields the same
// key. bits must be 1024 or 2048. Public exponent is 65537.
RsaKeyPair rsa_generate(Rng& rng, unsigned bits);

// PKCS#1 v1.5 signature over sha256(message). Signature length equals the
// modulus length (128 or 256 bytes).
Bytes rsa_sign(const RsaPrivateKey& key, ByteSpan message);
bool rsa_verify(const RsaPublicKey& key, ByteSpan message, ByteSpan signature);

// DER encodings compatible with the usual PKCS#8 / SubjectPublicKeyInfo
// forms for rsaEncryption, so external tooling can read our keys and we can
// read theirs.
Bytes encode_pkcs8(const RsaPrivateKey& key);
Result<RsaPrivateKey> decode_pkcs8(ByteSpan der);
Bytes encode_spki(const RsaPublicKey& key);
Result<RsaPublicKey> decode_spki(ByteSpan der);

// Big-endian export with no leading zeros (empty for zero).
Bytes mpz_to_bytes(const mpz_class& v);
// Big-endian export left padded to exactly len bytes.
Bytes mpz_to_fixed(const mpz_class& v, std::size_t len);
mpz_class bytes_to_mpz(ByteSpan data);

}  // namespace microtee::crypto
