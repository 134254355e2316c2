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


#ifndef MASKSTEGO_CLI_H_
#define MASKSTEGO_CLI_H_

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "maskstego/backend.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

// Exit statuses of cli_main.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitProtocolMismatch = 3;

// Builds a backend from "table:<path>", "hash:<seed>" or "model:<dir>".
// Table and hash backends are sized by `vocab`. Throws
// StegoError(kInvalidConfig) for an unknown scheme.
std::unique_ptr<LanguageModelBackend> make_backend(const std::string& spec,
                                                   const Vocabulary& vocab);

// Entry point of the maskstego command. args[0] is the program name.
// Failures print one line to `err`:
//
//   error code=<name> message="<text>"
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace maskstego

#endif  // MASKSTEGO_CLI_H_
