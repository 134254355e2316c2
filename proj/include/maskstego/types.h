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

#ifndef MASKSTEGO_TYPES_H_
#define MASKSTEGO_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace maskstego {

// Line number in the vocabulary file.
using TokenId = std::uint32_t;

// Token indices selected for substitution within one sentence, strictly
// increasing.
struct MaskPlan {
  std::vector<std::size_t> positions;

  std::size_t size() const { return positions.size(); }
  bool empty() const { return positions.empty(); }
  bool contains(std::size_t position) const;

  friend bool operator==(const MaskPlan&, const MaskPlan&) = default;
};

struct CandidateEntry {
  TokenId id = 0;
  std::string token;
  double probability = 0.0;

  friend bool operator==(const CandidateEntry&, const CandidateEntry&) = default;
};

// Candidate order: probability descending, then vocabulary index ascending.
bool candidate_precedes(const CandidateEntry& a, const CandidateEntry& b);

// Largest n with 2^n <= c; 0 when c <= 1.
int chunk_size(std::size_t c);

// Ordered substitution candidates for one masked position. Only the first
// 2^n entries carry a chunk value.
struct CandidateSet {
  std::vector<CandidateEntry> entries;

  std::size_t c() const { return entries.size(); }
  int n() const { return chunk_size(entries.size()); }

  // Rank of `token` among the first 2^n entries, or -1.
  long rank_of(const std::string& token) const;
};

struct StegoResult {
  std::string stego_text;
  std::size_t message_bits = 0;  // framed length, header included
  std::size_t bits_embedded = 0;
  std::size_t padding_bits = 0;
  std::size_t sentences_used = 0;
  std::size_t positions_edited = 0;  // planned positions with n >= 1
  std::size_t positions_planned = 0;
  std::size_t positions_zero_capacity = 0;
};

}  // namespace maskstego

#endif  // MASKSTEGO_TYPES_H_
