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

#include "maskstego/vocabulary.h"

#include "maskstego/digest.h"
#include "maskstego/error.h"

namespace maskstego {

bool is_special_token(std::string_view token) {
  return token.size() > 2 && token.front() == '[' && token.back() == ']';
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

Vocabulary Vocabulary::parse(std::string_view contents) {
  Vocabulary vocab;
  vocab.digest_ = sha256_hex(contents);
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    auto id = static_cast<TokenId>(vocab.tokens_.size());
    // The first occurrence of a duplicate keeps the index.
    vocab.index_.emplace(std::string(line), id);
    vocab.tokens_.emplace_back(line);
    start = end + 1;
  }
  return vocab;
}

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens) {
  std::string contents;
  for (const auto& t : tokens) {
    contents += t;
    contents.push_back('\n');
  }
  return parse(contents);
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::require(std::string_view token) const {
  auto id = find(token);
  if (!id) {
    throw StegoError(ErrorCode::kParse,
                     "vocabulary lacks required token " + std::string(token));
  }
  return *id;
}

}  // namespace maskstego
