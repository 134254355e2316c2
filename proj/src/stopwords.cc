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

#include "maskstego/stopwords.h"

#include "maskstego/digest.h"
#include "maskstego/unicode.h"

namespace maskstego {

StopwordList StopwordList::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

StopwordList StopwordList::parse(std::string_view contents) {
  StopwordList list;
  list.digest_ = sha256_hex(contents);
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) list.entries_.insert(unicode::to_lower(line));
    start = end + 1;
  }
  return list;
}

StopwordList StopwordList::from_words(const std::vector<std::string>& words) {
  std::string contents;
  for (const auto& w : words) {
    contents += w;
    contents.push_back('\n');
  }
  return parse(contents);
}

bool StopwordList::contains(std::string_view word) const {
  return entries_.contains(unicode::to_lower(word));
}

}  // namespace maskstego
