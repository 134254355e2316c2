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


#ifndef MASKSTEGO_PROTOCOL_H_
#define MASKSTEGO_PROTOCOL_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maskstego/config.h"

namespace maskstego {

inline constexpr std::string_view kProtocolFormat = "maskstego-protocol/1";

// Everything sender and receiver must agree on, as ordered key=value lines:
//
//   format, backend, vocab_digest, stopwords_digest, abbreviations, f, p,
//   skip_punct_num, skip_stopwords, skip_subwords, skip_capitalized,
//   safe_mode, framing
class ProtocolDescriptor {
 public:
  static ProtocolDescriptor describe(const StegoConfig& config,
                                     const std::string& backend_identity,
                                     const std::string& vocab_digest,
                                     const std::string& stopwords_digest);

  // Throws StegoError(kParse) on malformed lines or duplicate keys.
  static ProtocolDescriptor parse(std::string_view text);

  std::string to_text() const;
  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }
  // Empty when absent.
  std::string get(std::string_view key) const;

  // Keys whose values differ, or that only one side has, in this
  // descriptor's order followed by keys only `other` has.
  std::vector<std::string> differences(const ProtocolDescriptor& other) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Throws StegoError(kProtocolMismatch) naming the differing keys.
void require_compatible(const ProtocolDescriptor& expected,
                        const ProtocolDescriptor& actual);

// Shortest decimal that reads back to the same double.
std::string format_double(double value);

}  // namespace maskstego

#endif  // MASKSTEGO_PROTOCOL_H_
