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

#include "maskstego/token_seq.h"

#include <algorithm>
#include <stdexcept>

namespace maskstego {

namespace {

bool attaches_left(std::string_view piece) {
  static constexpr std::string_view kClosing[] = {
      ".", ",", ";", ":", "!", "?", ")", "]", "}", "%", "'"};
  return std::find(std::begin(kClosing), std::end(kClosing), piece) !=
         std::end(kClosing);
}

bool attaches_right(std::string_view piece) {
  static constexpr std::string_view kOpening[] = {"(", "[", "{", "$", "'"};
  return std::find(std::begin(kOpening), std::end(kOpening), piece) !=
         std::end(kOpening);
}

}  // namespace

bool is_continuation_piece(std::string_view piece) {
  return piece.size() > kContinuationMarker.size() &&
         piece.starts_with(kContinuationMarker);
}

std::string_view strip_continuation(std::string_view piece) {
  if (is_continuation_piece(piece)) piece.remove_prefix(kContinuationMarker.size());
  return piece;
}

TokenSeq TokenSeq::from_pieces(const std::vector<std::string>& pieces) {
  std::vector<Token> tokens;
  tokens.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Token token;
    token.piece = pieces[i];
    token.surface = std::string(strip_continuation(pieces[i]));
    token.space_before = i > 0 && !is_continuation_piece(pieces[i]) &&
                         !attaches_left(pieces[i]) &&
                         !attaches_right(pieces[i - 1]);
    tokens.push_back(std::move(token));
  }
  return TokenSeq(std::move(tokens));
}

TokenSeq TokenSeq::from_pieces(std::initializer_list<std::string_view> pieces) {
  return from_pieces(std::vector<std::string>(pieces.begin(), pieces.end()));
}

std::vector<std::string> TokenSeq::pieces() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) out.push_back(t.piece);
  return out;
}

void TokenSeq::replace(std::size_t position, std::string piece) {
  Token& token = tokens_.at(position);
  token.surface = std::string(strip_continuation(piece));
  token.piece = std::move(piece);
}

TokenSeq TokenSeq::with_replacement(std::size_t position,
                                    std::string piece) const {
  TokenSeq out = *this;
  out.replace(position, std::move(piece));
  return out;
}

TokenSeq TokenSeq::slice(std::size_t first, std::size_t last) const {
  if (first > last || last > tokens_.size()) {
    throw std::out_of_range("TokenSeq::slice");
  }
  return TokenSeq(std::vector<Token>(tokens_.begin() + first,
                                     tokens_.begin() + last));
}

bool operator==(const TokenSeq& a, const TokenSeq& b) {
  return std::equal(a.tokens_.begin(), a.tokens_.end(), b.tokens_.begin(),
                    b.tokens_.end(), [](const Token& x, const Token& y) {
                      return x.piece == y.piece;
                    });
}

std::string detokenize(const TokenSeq& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (i > 0 && t.space_before) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

}  // namespace maskstego
