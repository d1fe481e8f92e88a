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

#include "microtee/wire.hpp"

namespace microtee {

Result<Message> encode_request(const ServiceRequest& req) {
  Message msg;
  msg.label = req.service_id;
  msg.words.push_back(static_cast<Word>(req.payload.size()));
  if (req.shared) {
    msg.shared_buf = req.shared;
    return msg;
  }
  if (req.payload.size() > MAX_INLINE_BYTES) {
    return ErrorCode::MSG_TOO_LONG;
  }
  std::vector<Word> data = bytes_to_words(req.payload);
  msg.words.insert(msg.words.end(), data.begin(), data.end());
  return msg;
}

Message encode_response_header(ErrorCode status, std::size_t nbytes,
                               bool inline_data, const Bytes& payload) {
  Message msg;
  msg.words.push_back(static_cast<Word>(status));
  msg.words.push_back(static_cast<Word>(nbytes));
  if (inline_data) {
    std::vector<Word> data = bytes_to_words(payload);
    msg.words.insert(msg.words.end(), data.begin(), data.end());
  }
  return msg;
}

}  // namespace microtee
