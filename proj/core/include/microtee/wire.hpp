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

#include "microtee/objects.hpp"
#include "microtee/result.hpp"
#include "microtee/words.hpp"

namespace microtee {

// Service IDs carried in the message label.
inline constexpr Word SVC_AES_ENC = 0x10;
inline constexpr Word SVC_AES_DEC = 0x11;
inline constexpr Word SVC_RSA_SIGN = 0x12;
inline constexpr Word SVC_RSA_VERIFY = 0x13;
inline constexpr Word SVC_SHA256 = 0x14;
inline constexpr Word SVC_SEAL = 0x20;
inline constexpr Word SVC_UNSEAL = 0x21;
inline constexpr Word SVC_ATTEST = 0x22;
inline constexpr Word SVC_GET_ATTEST_PUBKEY = 0x23;
inline constexpr Word SVC_ECHO = 0x30;  // benchmark plumbing only

// Inline payloads ride in message words: word 0 is the byte length, the
// rest carry the bytes little-endian. Anything larger goes through a
// shared buffer; then word 0 is the byte length within the buffer.
inline constexpr std::size_t MAX_INLINE_BYTES = (MAX_MSG_WORDS - 1) * 4;

struct ServiceRequest {
  Word service_id = 0;
  Bytes payload;
  // When set, payload lives at [0, payload_len) of this shared region and
  // the response is written back to the same region.
  std::optional<SharedBufDesc> shared;
};

struct ServiceResponse {
  ErrorCode status = ErrorCode::OK;
  Bytes payload;
};

// Request -> message. Fails with MSG_TOO_LONG if an inline payload does
// not fit and no shared buffer was supplied.
Result<Message> encode_request(const ServiceRequest& req);

// Reply message layout: word 0 status, word 1 byte length, then inline
// data words (absent when the response went through the shared buffer).
Message encode_response_header(ErrorCode status, std::size_t nbytes,
                               bool inline_data, const Bytes& payload);

}  // namespace microtee
