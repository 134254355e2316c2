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

#ifndef MASKSTEGO_DIGEST_H_
#define MASKSTEGO_DIGEST_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace maskstego {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

// Reads the whole file in binary mode; throws StegoError(kIo).
std::string read_file(const std::filesystem::path& path);

}  // namespace maskstego

#endif  // MASKSTEGO_DIGEST_H_
