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

#ifndef MASKSTEGO_UNICODE_H_
#define MASKSTEGO_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Character classes shared by the tokenizer, the sentence splitter and the
// eligibility rules. Each mirrors the reference BERT basic tokenizer.
namespace maskstego::unicode {

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset in the source
  std::size_t length;  // encoded byte length
};

// Malformed sequences decode to U+FFFD, one byte at a time.
std::vector<CodePoint> decode(std::string_view text);
void append_utf8(std::string& out, char32_t cp);

// Space, tab, newline, carriage return, or category Zs.
bool is_whitespace(char32_t cp);
// Category C* other than tab, newline and carriage return.
bool is_control(char32_t cp);
// ASCII symbols 33-47, 58-64, 91-96, 123-126, or category P*.
bool is_punctuation(char32_t cp);
// CJK Unified Ideographs blocks, split into single-character words.
bool is_cjk(char32_t cp);
bool is_alphabetic(char32_t cp);
bool is_uppercase(char32_t cp);

std::string to_lower(std::string_view text);
bool has_alphabetic(std::string_view text);
bool has_uppercase(std::string_view text);

}  // namespace maskstego::unicode

#endif  // MASKSTEGO_UNICODE_H_
