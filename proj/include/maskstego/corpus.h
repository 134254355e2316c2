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


#ifndef MASKSTEGO_CORPUS_H_
#define MASKSTEGO_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

// Splits UTF-8 text into documents separated by blank (whitespace-only)
// lines. Lines inside a document are joined with '\n'.
std::vector<std::string> parse_corpus(std::string_view text);
std::vector<std::string> load_corpus(const std::filesystem::path& path);

// Whitespace-delimited words.
std::size_t count_words(std::string_view text);

}  // namespace maskstego

#endif  // MASKSTEGO_CORPUS_H_
