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

#ifndef MASKSTEGO_STOPWORDS_H_
#define MASKSTEGO_STOPWORDS_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

// Lowercase word forms, one per line in the canonical file. Lookup is
// case-insensitive. The digest is the SHA-256 of the file bytes and is part
// of the shared protocol.
class StopwordList {
 public:
  static StopwordList load(const std::filesystem::path& path);
  static StopwordList parse(std::string_view contents);
  static StopwordList from_words(const std::vector<std::string>& words);

  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::string& digest() const { return digest_; }

 private:
  std::set<std::string, std::less<>> entries_;
  std::string digest_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_STOPWORDS_H_
