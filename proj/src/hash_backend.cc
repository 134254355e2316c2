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


#include "maskstego/hash_backend.h"

#include <cmath>

#include "maskstego/error.h"

namespace maskstego {

namespace {

constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t fnv_u64(std::uint64_t state, std::uint64_t value) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(value >> (8 * i));
  return fnv1a64(bytes, sizeof bytes, state);
}

std::uint64_t fnv_byte(std::uint64_t state, unsigned char b) {
  return fnv1a64(&b, 1, state);
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t state) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    state ^= p[i];
    state *= kFnvPrime;
  }
  return state;
}

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

HashBackend::HashBackend(std::uint64_t seed, std::size_t vocab_size)
    : seed_(seed), vocab_size_(vocab_size) {
  if (vocab_size < 2) {
    throw StegoError(ErrorCode::kInvalidConfig,
                     "hash backend needs a vocabulary of at least 2 tokens");
  }
}

std::string HashBackend::identity() const {
  return "hash:" + std::to_string(seed_);
}

Distribution HashBackend::distribution(const std::vector<std::string>& pieces,
                                       std::size_t position) const {
  std::uint64_t key = fnv_u64(0xcbf29ce484222325ULL, seed_);
  for (const auto& piece : pieces) {
    key = fnv1a64(piece.data(), piece.size(), key);
    key = fnv_byte(key, 0x1F);
  }
  key = fnv_byte(key, 0x1E);
  key = fnv_u64(key, position);

  std::vector<double> weights(vocab_size_);
  double total = 0.0;
  for (std::size_t i = 0; i < vocab_size_; ++i) {
    std::uint64_t x = splitmix64_mix(key + (i + 1) * kGolden);
    double u = (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    weights[i] = 1.0 / (u * u);
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return Distribution(std::move(weights));
}

std::vector<Distribution> HashBackend::predict(
    const MaskedSentence& input) const {
  std::vector<Distribution> out;
  out.reserve(input.positions.size());
  for (std::size_t pos : input.positions) {
    out.push_back(distribution(input.pieces, pos));
  }
  return out;
}

}  // namespace maskstego
