// Copyright 2026 The maskstego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maskstego/error.h"

namespace maskstego {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
      return "invalid_config";
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kIo:
      return "io_error";
    case ErrorCode::kBackend:
      return "backend_error";
    case ErrorCode::kCapacityExhausted:
      return "capacity_exhausted";
    case ErrorCode::kDecodeMismatch:
      return "decode_mismatch";
    case ErrorCode::kHeaderUnderflow:
      return "header_underflow";
    case ErrorCode::kMessageUnderflow:
      return "message_underflow";
    case ErrorCode::kProtocolMismatch:
      return "protocol_mismatch";
  }
  return "unknown";
}

CapacityExhausted::CapacityExhausted(std::size_t bits_embedded,
                                     std::size_t bits_required)
    : StegoError(ErrorCode::kCapacityExhausted,
                 "cover text exhausted after embedding " +
                     std::to_string(bits_embedded) + " of " +
                     std::to_string(bits_required) + " bits"),
      bits_embedded_(bits_embedded),
      bits_required_(bits_required) {}

}  // namespace maskstego
