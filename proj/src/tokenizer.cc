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

#include "maskstego/tokenizer.h"

#include <string>
#include <vector>

#include "maskstego/unicode.h"

namespace maskstego {

namespace {

struct Word {
  std::vector<unicode::CodePoint> chars;
  bool space_before = false;
};

std::vector<Word> split_words(std::string_view text) {
  std::vector<Word> words;
  Word current;
  bool pending_space = false;

  auto flush = [&] {
    if (!current.chars.empty()) {
      words.push_back(std::move(current));
      pending_space = false;
    }
    current = Word{};
  };

  for (const auto& cp : unicode::decode(text)) {
    if (cp.value == 0 || cp.value == 0xFFFD || unicode::is_control(cp.value)) {
      continue;
    }
    if (unicode::is_whitespace(cp.value)) {
      flush();
      pending_space = !words.empty();
      continue;
    }
    if (unicode::is_punctuation(cp.value) || unicode::is_cjk(cp.value)) {
      flush();
      Word single;
      single.chars.push_back(cp);
      single.space_before = pending_space;
      words.push_back(std::move(single));
      pending_space = false;
      continue;
    }
    if (current.chars.empty()) current.space_before = pending_space;
    current.chars.push_back(cp);
  }
  flush();
  return words;
}

std::string encode_range(const std::vector<unicode::CodePoint>& chars,
                         std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    unicode::append_utf8(out, chars[i].value);
  }
  return out;
}

}  // namespace

TokenSeq WordPieceTokenizer::tokenize(std::string_view text) const {
  std::vector<Token> tokens;
  for (const Word& word : split_words(text)) {
    const auto& chars = word.chars;
    const std::size_t word_begin = chars.front().offset;
    const std::size_t word_end = chars.back().offset + chars.back().length;

    std::vector<Token> pieces;
    bool unknown = chars.size() > max_chars_per_word_;
    std::size_t start = 0;
    std::string candidate;
    while (!unknown && start < chars.size()) {
      std::size_t end = chars.size();
      bool found = false;
      while (start < end) {
        candidate.clear();
        if (start > 0) candidate += kContinuationMarker;
        candidate += encode_range(chars, start, end);
        if (vocab_.contains(candidate)) {
          found = true;
          break;
        }
        --end;
      }
      if (!found) {
        unknown = true;
        break;
      }
      Token token;
      token.piece = candidate;
      token.surface = std::string(strip_continuation(candidate));
      token.space_before = start == 0 && word.space_before;
      token.begin = chars[start].offset;
      token.end = chars[end - 1].offset + chars[end - 1].length;
      pieces.push_back(std::move(token));
      start = end;
    }

    if (unknown) {
      Token token;
      token.piece = std::string(kUnknownToken);
      token.surface = encode_range(chars, 0, chars.size());
      token.space_before = word.space_before;
      token.begin = word_begin;
      token.end = word_end;
      tokens.push_back(std::move(token));
    } else {
      for (auto& p : pieces) tokens.push_back(std::move(p));
    }
  }
  return TokenSeq(std::move(tokens));
}

}  // namespace maskstego
