#!/usr/bin/env python3
"""Generates the frozen crypto vectors used by the C++ regression tests.

Run manually; outputs C++ array literals on stdout. The values printed by
this script were pasted into tests/crypto_vectors.hpp and are not
regenerated at build time.
"""
import textwrap

from cryptography.hazmat.primitives import hashes, serialization
from cryptography.hazmat.primitives.asymmetric import padding, rsa
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
import hashlib, hmac as pyhmac

def cxx(name, data):
    hexes = ", ".join(f"0x{b:02x}" for b in data)
    body = textwrap.fill(hexes, 76, initial_indent="    ", subsequent_indent="    ")
    print(f"inline constexpr unsigned char {name}[] = {{\n{body}}};\n")

# --- AES-128-CBC (NIST SP 800-38A F.2.1 key/iv/plaintext) ---
key = bytes.fromhex("2b7e151628aed2a6abf7158809cf4f3c")
iv = bytes.fromhex("000102030405060708090a0b0c0d0e0f")
pt = bytes.fromhex(
    "6bc1bee22e409f96e93d7e117393172a"
    "ae2d8a571e03ac9c9eb76fac45af8e51"
    "30c81c46a35ce411e5fbc1191a0a52ef"
    "f69f2445df4f9b17ad2b417be66c3710")
enc = Cipher(algorithms.AES(key), modes.CBC(iv)).encryptor()
ct_nopad = enc.update(pt) + enc.finalize()
# Same plaintext with PKCS#7 padding (a full extra block of 0x10).
enc2 = Cipher(algorithms.AES(key), modes.CBC(iv)).encryptor()
ct_padded = enc2.update(pt + bytes([16] * 16)) + enc2.finalize()
cxx("AES_CBC_KEY", key)
cxx("AES_CBC_IV", iv)
cxx("AES_CBC_PT", pt)
cxx("AES_CBC_CT", ct_nopad)
cxx("AES_CBC_CT_PADDED", ct_padded)

# --- SHA-256 ---
cxx("SHA256_EMPTY", hashlib.sha256(b"").digest())
cxx("SHA256_ABC", hashlib.sha256(b"abc").digest())

# --- HMAC-SHA256 (RFC 4231 case 1) ---
cxx("HMAC_KEY", b"\x0b" * 20)
cxx("HMAC_DATA", b"Hi There")
cxx("HMAC_TAG", pyhmac.new(b"\x0b" * 20, b"Hi There", hashlib.sha256).digest())

# --- RSA-2048 regression key + PKCS#1 v1.5 signature ---
priv = rsa.generate_private_key(public_exponent=65537, key_size=2048)
priv_der = priv.private_bytes(
    serialization.Encoding.DER,
    serialization.PrivateFormat.PKCS8,
    serialization.NoEncryption())
pub_der = priv.public_key().public_bytes(
    serialization.Encoding.DER,
    serialization.PublicFormat.SubjectPublicKeyInfo)
msg = b"microtee regression message"
sig = priv.sign(msg, padding.PKCS1v15(), hashes.SHA256())
cxx("RSA_PRIV_DER", priv_der)
cxx("RSA_PUB_DER", pub_der)
cxx("RSA_MSG", msg)
cxx("RSA_SIG", sig)
