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


#include "maskstego/corpus.h"

#include "maskstego/digest.h"
#include "maskstego/unicode.h"

namespace maskstego {

namespace {

bool is_blank(std::string_view line) {
  for (const auto& cp : unicode::decode(line)) {
    if (!unicode::is_whitespace(cp.value)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> parse_corpus(std::string_view text) {
  std::vector<std::string> docs;
  std::string current;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank(line)) {
      if (!current.empty()) docs.push_back(std::move(current));
      current.clear();
    } else {
      if (!current.empty()) current.push_back('\n');
      current.append(line);
    }
    start = nl + 1;
  }
  if (!current.empty()) docs.push_back(std::move(current));
  return docs;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path));
}

std::size_t count_words(std::string_view text) {
  std::size_t words = 0;
  bool in_word = false;
  for (const auto& cp : unicode::decode(text)) {
    bool ws = unicode::is_whitespace(cp.value);
    if (!ws && !in_word) ++words;
    in_word = !ws;
  }
  return words;
}

}  // namespace maskstego
