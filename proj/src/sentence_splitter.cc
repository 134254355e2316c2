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

#include "maskstego/sentence_splitter.h"

#include <algorithm>
#include <array>

#include "maskstego/unicode.h"

namespace maskstego {

namespace {

// abbrev-v1, matched case-sensitively.
constexpr std::array<std::string_view, 33> kAbbreviations = {
    "Mr",  "Mrs",  "Ms",  "Dr",  "Prof", "Sr",   "Jr",  "St",   "Mt",
    "Gen", "Gov",  "Sen", "Rep", "Rev",  "Capt", "Col", "Lt",   "Sgt",
    "Inc", "Ltd",  "Co",  "Corp", "Vol",  "Fig", "Jan",  "Feb",
    "Aug", "Sept", "Oct", "Nov", "Dec",  "Ph",   "Messrs"};

bool is_closing(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case U'”': case U'’': case U'»':
      return true;
    default:
      return false;
  }
}

bool is_opening(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U'(': case U'[': case U'{':
    case U'“': case U'‘': case U'«':
      return true;
    default:
      return false;
  }
}

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?';
}

// "U.S", "e.g", "i.e": single letters joined by single periods.
bool is_dotted_initialism(const std::vector<unicode::CodePoint>& cps,
                          std::size_t first, std::size_t last) {
  if (last - first < 3) return false;
  for (std::size_t i = first; i < last; ++i) {
    bool letter_slot = (i - first) % 2 == 0;
    if (letter_slot ? !unicode::is_alphabetic(cps[i].value)
                    : cps[i].value != U'.') {
      return false;
    }
  }
  return (last - first) % 2 == 1;
}

}  // namespace

std::span<const std::string_view> abbreviations() { return kAbbreviations; }

bool is_sentence_boundary(std::string_view left, std::string_view right) {
  auto lcps = unicode::decode(left);
  std::size_t last = lcps.size();
  while (last > 0 && is_closing(lcps[last - 1].value)) --last;
  if (last == 0 || !is_terminator(lcps[last - 1].value)) return false;

  if (lcps[last - 1].value == U'.') {
    std::size_t first = 0;
    while (first < last - 1 && is_opening(lcps[first].value)) ++first;
    std::size_t word_end = last - 1;
    std::string_view word;
    if (first < word_end) {
      word = left.substr(lcps[first].offset,
                         lcps[word_end].offset - lcps[first].offset);
    }
    if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
        kAbbreviations.end()) {
      return false;
    }
    if (is_dotted_initialism(lcps, first, word_end)) return false;
  }

  for (const auto& cp : unicode::decode(right)) {
    if (is_opening(cp.value)) continue;
    return unicode::is_uppercase(cp.value);
  }
  return false;
}

std::vector<SentenceSpan> sentence_spans(std::string_view text) {
  struct Chunk {
    std::size_t begin, end;
  };
  std::vector<Chunk> chunks;
  std::size_t chunk_begin = std::string_view::npos;
  for (const auto& cp : unicode::decode(text)) {
    if (unicode::is_whitespace(cp.value)) {
      if (chunk_begin != std::string_view::npos) {
        chunks.push_back({chunk_begin, cp.offset});
        chunk_begin = std::string_view::npos;
      }
    } else if (chunk_begin == std::string_view::npos) {
      chunk_begin = cp.offset;
    }
  }
  if (chunk_begin != std::string_view::npos) {
    chunks.push_back({chunk_begin, text.size()});
  }

  std::vector<SentenceSpan> spans;
  if (chunks.empty()) return spans;
  SentenceSpan current{chunks.front().begin, chunks.front().end};
  for (std::size_t i = 1; i < chunks.size(); ++i) {
    auto left = text.substr(chunks[i - 1].begin,
                            chunks[i - 1].end - chunks[i - 1].begin);
    auto right = text.substr(chunks[i].begin, chunks[i].end - chunks[i].begin);
    if (is_sentence_boundary(left, right)) {
      spans.push_back(current);
      current.begin = chunks[i].begin;
    }
    current.end = chunks[i].end;
  }
  spans.push_back(current);
  return spans;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& span : sentence_spans(text)) {
    out.emplace_back(text.substr(span.begin, span.end - span.begin));
  }
  return out;
}

}  // namespace maskstego
