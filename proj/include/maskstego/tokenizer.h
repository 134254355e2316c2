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

#ifndef MASKSTEGO_TOKENIZER_H_
#define MASKSTEGO_TOKENIZER_H_

#include <cstddef>
#include <string_view>

#include "maskstego/token_seq.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

// Cased BERT tokenization: control characters are dropped, text is split on
// whitespace, every punctuation and CJK character becomes its own word, and
// each word is segmented by greedy longest-match-first against the
// vocabulary, non-initial pieces carrying the "##" marker. A word with no
// complete segmentation, or longer than `max_chars_per_word` characters,
// becomes a single [UNK] whose surface is the original word.
//
// Holds a reference to `vocab`, which must outlive the tokenizer.
class WordPieceTokenizer {
 public:
  explicit WordPieceTokenizer(const Vocabulary& vocab,
                              std::size_t max_chars_per_word = 100)
      : vocab_(vocab), max_chars_per_word_(max_chars_per_word) {}

  TokenSeq tokenize(std::string_view text) const;

  const Vocabulary& vocabulary() const { return vocab_; }

 private:
  const Vocabulary& vocab_;
  std::size_t max_chars_per_word_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_TOKENIZER_H_
