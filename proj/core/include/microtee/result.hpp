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

#include <cassert>
#include <string_view>
#include <utility>
#include <variant>

namespace microtee {

// Every way a simulated operation can fail.
enum class ErrorCode {
  OK = 0,

  // Kernel object / capability layer.
  OUT_OF_MEMORY,
  INVALID_PRIORITY,
  NO_GRANT_RIGHT,
  CAP_MISSING,
  NO_SEND_RIGHT,
  NO_RECV_RIGHT,
  MSG_TOO_LONG,
  IDLE,
  INVALID_TCB,
  UNREGISTERED_IRQ,
  NOT_PENDING,
  FAULT,

  // Monitor layer.
  NO_SAVED_CONTEXT,
  EMPTY_SLOT,
  NOT_BOOTED,

  // Root task.
  BOOT_ENV_INVALID,
  TA_FAULTED,

  // Secure boot.
  PUBKEY_HASH_MISMATCH,
  BAD_SIGNATURE,
  MALFORMED,

  // Security services.
  BAD_KEY,
  BAD_KEY_LEN,
  BAD_PADDING,
  INTEGRITY_FAIL,
  UNKNOWN_SERVICE_ID,
  BAD_ARGUMENT,

  // Tooling / IO.
  IO_ERROR,
  PARSE_ERROR,
};

constexpr std::string_view error_name(ErrorCode e) {
  switch (e) {
    case ErrorCode::OK: return "OK";
    case ErrorCode::OUT_OF_MEMORY: return "OUT_OF_MEMORY";
    case ErrorCode::INVALID_PRIORITY: return "INVALID_PRIORITY";
    case ErrorCode::NO_GRANT_RIGHT: return "NO_GRANT_RIGHT";
    case ErrorCode::CAP_MISSING: return "CAP_MISSING";
    case ErrorCode::NO_SEND_RIGHT: return "NO_SEND_RIGHT";
    case ErrorCode::NO_RECV_RIGHT: return "NO_RECV_RIGHT";
    case ErrorCode::MSG_TOO_LONG: return "MSG_TOO_LONG";
    case ErrorCode::IDLE: return "IDLE";
    case ErrorCode::INVALID_TCB: return "INVALID_TCB";
    case ErrorCode::UNREGISTERED_IRQ: return "UNREGISTERED_IRQ";
    case ErrorCode::NOT_PENDING: return "NOT_PENDING";
    case ErrorCode::FAULT: return "FAULT";
    case ErrorCode::NO_SAVED_CONTEXT: return "NO_SAVED_CONTEXT";
    case ErrorCode::EMPTY_SLOT: return "EMPTY_SLOT";
    case ErrorCode::NOT_BOOTED: return "NOT_BOOTED";
    case ErrorCode::BOOT_ENV_INVALID: return "BOOT_ENV_INVALID";
    case ErrorCode::TA_FAULTED: return "TA_FAULTED";
    case ErrorCode::PUBKEY_HASH_MISMATCH: return "PUBKEY_HASH_MISMATCH";
    case ErrorCode::BAD_SIGNATURE: return "BAD_SIGNATURE";
    case ErrorCode::MALFORMED: return "MALFORMED";
    case ErrorCode::BAD_KEY: return "BAD_KEY";
    case ErrorCode::BAD_KEY_LEN: return "BAD_KEY_LEN";
    case ErrorCode::BAD_PADDING: return "BAD_PADDING";
    case ErrorCode::INTEGRITY_FAIL: return "INTEGRITY_FAIL";
    case ErrorCode::UNKNOWN_SERVICE_ID: return "UNKNOWN_SERVICE_ID";
    case ErrorCode::BAD_ARGUMENT: return "BAD_ARGUMENT";
    case ErrorCode::IO_ERROR: return "IO_ERROR";
    case ErrorCode::PARSE_ERROR: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

// Minimal expected-style result. gcc 11 has no std::expected; this is the
// small subset the simulator needs.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(ErrorCode e) : v_(e) { assert(e != ErrorCode::OK); }  // NOLINT

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  ErrorCode error() const {
    assert(!ok());
    return std::get<ErrorCode>(v_);
  }

  T& value() & {
    assert(ok());
    return std::get<T>(v_);
  }
  const T& value() const& {
    assert(ok());
    return std::get<T>(v_);
  }
  T&& value() && {
    assert(ok());
    return std::get<T>(std::move(v_));
  }

  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }

 private:
  std::variant<T, ErrorCode> v_;
};

// Result<void> analogue.
class Status {
 public:
  Status() : e_(ErrorCode::OK) {}
  Status(ErrorCode e) : e_(e) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return e_ == ErrorCode::OK; }
  explicit operator bool() const { return ok(); }
  ErrorCode error() const { return e_; }
  std::string_view name() const { return error_name(e_); }

 private:
  ErrorCode e_;
};

}  // namespace microtee
