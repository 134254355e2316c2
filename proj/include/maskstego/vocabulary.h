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

#ifndef MASKSTEGO_VOCABULARY_H_
#define MASKSTEGO_VOCABULARY_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "maskstego/types.h"

namespace maskstego {

inline constexpr std::string_view kUnknownToken = "[UNK]";
inline constexpr std::string_view kMaskToken = "[MASK]";
inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";

// True for bracketed control tokens such as [UNK] or [unused3]. They are
// never offered as substitution candidates.
bool is_special_token(std::string_view token);

// WordPiece vocabulary: one token per line, the line number is the index.
class Vocabulary {
 public:
  static Vocabulary load(const std::filesystem::path& path);
  // Parses file contents; the digest covers exactly these bytes.
  static Vocabulary parse(std::string_view contents);
  static Vocabulary from_tokens(const std::vector<std::string>& tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(TokenId id) const { return tokens_.at(id); }
  std::optional<TokenId> find(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }

  // Index of a required special token; throws StegoError(kParse) if absent.
  TokenId require(std::string_view token) const;

  const std::string& digest() const { return digest_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId, Hash, std::equal_to<>> index_;
  std::string digest_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_VOCABULARY_H_
