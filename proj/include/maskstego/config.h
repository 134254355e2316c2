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

#ifndef MASKSTEGO_CONFIG_H_
#define MASKSTEGO_CONFIG_H_

#include <cstddef>
#include <string>
#include <variant>

namespace maskstego {

inline constexpr std::size_t kHeaderWidth = 32;

// Sender and receiver agree on the message length out of band.
struct FixedFraming {
  std::size_t bit_count = 32;
  friend bool operator==(const FixedFraming&, const FixedFraming&) = default;
};

// A big-endian length header of `width` bits precedes the message.
struct HeaderFraming {
  std::size_t width = kHeaderWidth;
  friend bool operator==(const HeaderFraming&, const HeaderFraming&) = default;
};

using Framing = std::variant<FixedFraming, HeaderFraming>;

// Everything about the masking and encoding strategy that both parties must
// share. Defaults are the measured configuration: mask every third eligible
// token, keep candidates above 2%, skip punctuation/numbers, stopwords and
// continuation subwords.
struct StegoConfig {
  std::size_t f = 3;
  double p = 0.02;
  bool skip_punct_num = true;
  bool skip_stopwords = true;
  bool skip_subwords = true;
  bool skip_capitalized = false;
  bool safe_mode = true;
  Framing framing = FixedFraming{};

  friend bool operator==(const StegoConfig&, const StegoConfig&) = default;
};

// Returns `config` unchanged, or throws StegoError(kInvalidConfig) when
// f == 0, p is outside (0, 1), a fixed framing carries zero bits, or a header
// framing is not exactly kHeaderWidth bits wide.
StegoConfig validate_config(StegoConfig config);

// "fixed:<bits>" or "header:<width>".
std::string framing_name(const Framing& framing);

}  // namespace maskstego

#endif  // MASKSTEGO_CONFIG_H_
