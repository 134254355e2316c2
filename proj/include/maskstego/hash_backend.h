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


#ifndef MASKSTEGO_HASH_BACKEND_H_
#define MASKSTEGO_HASH_BACKEND_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "maskstego/backend.h"

namespace maskstego {

std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t state = 0xcbf29ce484222325ULL);

// The splitmix64 output function applied to `x`.
std::uint64_t splitmix64_mix(std::uint64_t x);

// Model-free backend with heavy-tailed, fully specified distributions.
//
// For masked pieces w_0..w_{m-1} and a masked position q:
//   key = FNV-1a-64 over  seed (8 bytes, little endian),
//                         each w_j followed by the byte 0x1F,
//                         the byte 0x1E,
//                         q (8 bytes, little endian)
//   x_i = splitmix64_mix(key + (i + 1) * 0x9E3779B97F4A7C15)   (mod 2^64)
//   u_i = ((x_i >> 11) + 0.5) * 2^-53
//   w_i = 1 / u_i^2
// and prob(i) = w_i / sum_j w_j, summed in index order.
class HashBackend final : public LanguageModelBackend {
 public:
  // vocab_size must be at least 2.
  HashBackend(std::uint64_t seed, std::size_t vocab_size);

  std::vector<Distribution> predict(const MaskedSentence& input) const override;
  std::size_t vocab_size() const override { return vocab_size_; }
  std::string identity() const override;

  Distribution distribution(const std::vector<std::string>& pieces,
                            std::size_t position) const;

 private:
  std::uint64_t seed_;
  std::size_t vocab_size_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_HASH_BACKEND_H_
