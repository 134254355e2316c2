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

#ifndef MASKSTEGO_SENTENCE_SPLITTER_H_
#define MASKSTEGO_SENTENCE_SPLITTER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

// Version tag of the abbreviation list; part of the shared protocol.
inline constexpr std::string_view kAbbreviationListVersion = "abbrev-v1";

// Case-sensitive words that do not end a sentence when followed by a period.
std::span<const std::string_view> abbreviations();

// Rule-based sentence boundaries.
//
// Text is viewed as whitespace-delimited chunks. A boundary falls in the gap
// between `left` and `right` iff, after dropping trailing closing marks
// (" ' ) ] } and their typographic forms), `left` ends in . ! or ?; a period
// is not preceded by an abbreviation or a dotted initialism such as "U.S" or
// "e.g"; and `right`, after dropping leading opening marks, starts with an
// uppercase letter. The decision depends only on the two chunks.
bool is_sentence_boundary(std::string_view left, std::string_view right);

// Byte range of one sentence; sentences never start or end in whitespace.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Spans in order. The text between consecutive spans, and before the first
// and after the last, is whitespace only, so interleaving spans with those
// separators reproduces the input.
std::vector<SentenceSpan> sentence_spans(std::string_view text);

std::vector<std::string> split_sentences(std::string_view text);

}  // namespace maskstego

#endif  // MASKSTEGO_SENTENCE_SPLITTER_H_
