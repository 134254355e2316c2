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

#ifndef MASKSTEGO_TOKEN_SEQ_H_
#define MASKSTEGO_TOKEN_SEQ_H_

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

inline constexpr std::string_view kContinuationMarker = "##";
inline constexpr std::size_t kNoOffset = std::numeric_limits<std::size_t>::max();

// True iff the piece attaches to the preceding piece of the same word.
bool is_continuation_piece(std::string_view piece);

// The piece without its continuation marker.
std::string_view strip_continuation(std::string_view piece);

struct Token {
  // Vocabulary form; continuation pieces keep the "##" marker.
  std::string piece;
  // Text the token renders as. Equals the piece without its marker, except
  // for the unknown token, whose surface is the original word.
  std::string surface;
  // Whitespace separates this token from the previous one.
  bool space_before = false;
  // Byte range in the text the sequence was tokenized from, or kNoOffset.
  std::size_t begin = kNoOffset;
  std::size_t end = kNoOffset;

  bool is_continuation() const { return is_continuation_piece(piece); }
};

// A subword token sequence. Equality compares pieces only: spacing and
// offsets are presentation, not identity.
class TokenSeq {
 public:
  TokenSeq() = default;
  explicit TokenSeq(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  // Builds a sequence from bare pieces, deriving spacing from the fixed
  // attachment rules documented in detokenize().
  static TokenSeq from_pieces(const std::vector<std::string>& pieces);
  static TokenSeq from_pieces(std::initializer_list<std::string_view> pieces);

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  std::vector<std::string> pieces() const;

  // Replaces the piece at `position`. The whitespace before the token is
  // kept, matching how edits are spliced into the source text.
  void replace(std::size_t position, std::string piece);
  TokenSeq with_replacement(std::size_t position, std::string piece) const;

  // Tokens [first, last) as a new sequence.
  TokenSeq slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const TokenSeq& a, const TokenSeq& b);

 private:
  std::vector<Token> tokens_;
};

// Renders tokens as text: tokens without `space_before` attach to their
// predecessor, all others are preceded by one space. For sequences built with from_pieces, `space_before` is
// false for the first token, continuation pieces, the closing marks
// . , ; : ! ? ) ] } % and the apostrophe, and any token that follows one of
// the opening marks ( [ { $ or an apostrophe.
std::string detokenize(const TokenSeq& tokens);

}  // namespace maskstego

#endif  // MASKSTEGO_TOKEN_SEQ_H_
