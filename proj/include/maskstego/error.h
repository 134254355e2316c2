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

#ifndef MASKSTEGO_ERROR_H_
#define MASKSTEGO_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maskstego {

enum class ErrorCode {
  kInvalidConfig,
  kParse,
  kIo,
  kBackend,
  kCapacityExhausted,
  kDecodeMismatch,
  kHeaderUnderflow,
  kMessageUnderflow,
  kProtocolMismatch,
};

// Stable snake_case name, used in machine-readable CLI errors.
std::string_view error_code_name(ErrorCode code);

class StegoError : public std::runtime_error {
 public:
  StegoError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by encode when the cover runs out before the framed message is
// fully embedded.
class CapacityExhausted : public StegoError {
 public:
  CapacityExhausted(std::size_t bits_embedded, std::size_t bits_required);

  std::size_t bits_embedded() const { return bits_embedded_; }
  std::size_t bits_required() const { return bits_required_; }

 private:
  std::size_t bits_embedded_;
  std::size_t bits_required_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_ERROR_H_
