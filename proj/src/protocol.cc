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


#include "maskstego/protocol.h"

#include <charconv>

#include "maskstego/error.h"
#include "maskstego/sentence_splitter.h"

namespace maskstego {

namespace {

std::string flag(bool on) { return on ? "true" : "false"; }

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

ProtocolDescriptor ProtocolDescriptor::describe(
    const StegoConfig& config, const std::string& backend_identity,
    const std::string& vocab_digest, const std::string& stopwords_digest) {
  ProtocolDescriptor d;
  d.fields_ = {
      {"format", std::string(kProtocolFormat)},
      {"backend", backend_identity},
      {"vocab_digest", vocab_digest},
      {"stopwords_digest", stopwords_digest},
      {"abbreviations", std::string(kAbbreviationListVersion)},
      {"f", std::to_string(config.f)},
      {"p", format_double(config.p)},
      {"skip_punct_num", flag(config.skip_punct_num)},
      {"skip_stopwords", flag(config.skip_stopwords)},
      {"skip_subwords", flag(config.skip_subwords)},
      {"skip_capitalized", flag(config.skip_capitalized)},
      {"safe_mode", flag(config.safe_mode)},
      {"framing", framing_name(config.framing)},
  };
  return d;
}

ProtocolDescriptor ProtocolDescriptor::parse(std::string_view text) {
  ProtocolDescriptor d;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw StegoError(ErrorCode::kParse, "protocol line " +
                                              std::to_string(line_no) +
                                              ": expected key=value");
    }
    std::string key(line.substr(0, eq));
    if (!d.get(key).empty()) {
      throw StegoError(ErrorCode::kParse, "protocol: duplicate key " + key);
    }
    d.fields_.emplace_back(std::move(key), std::string(line.substr(eq + 1)));
  }
  return d;
}

std::string ProtocolDescriptor::to_text() const {
  std::string out;
  for (const auto& [key, value] : fields_) out += key + "=" + value + "\n";
  return out;
}

std::string ProtocolDescriptor::get(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return {};
}

std::vector<std::string> ProtocolDescriptor::differences(
    const ProtocolDescriptor& other) const {
  std::vector<std::string> out;
  for (const auto& [key, value] : fields_) {
    if (other.get(key) != value) out.push_back(key);
  }
  for (const auto& [key, value] : other.fields_) {
    if (get(key).empty() && !value.empty()) out.push_back(key);
  }
  return out;
}

void require_compatible(const ProtocolDescriptor& expected,
                        const ProtocolDescriptor& actual) {
  auto diff = expected.differences(actual);
  if (diff.empty()) return;
  std::string keys;
  for (const auto& k : diff) {
    if (!keys.empty()) keys += ",";
    keys += k;
  }
  throw StegoError(ErrorCode::kProtocolMismatch,
                   "protocol descriptor differs in: " + keys);
}

}  // namespace maskstego
