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


#include "maskstego/candidates.h"

#include <algorithm>
#include <bit>

#include "maskstego/eligibility.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

bool MaskPlan::contains(std::size_t position) const {
  return std::binary_search(positions.begin(), positions.end(), position);
}

bool candidate_precedes(const CandidateEntry& a, const CandidateEntry& b) {
  if (a.probability != b.probability) return a.probability > b.probability;
  return a.id < b.id;
}

int chunk_size(std::size_t c) {
  if (c <= 1) return 0;
  return static_cast<int>(std::bit_width(c)) - 1;
}

long CandidateSet::rank_of(const std::string& token) const {
  std::size_t usable = std::size_t{1} << n();
  if (entries.size() < 2) return -1;
  for (std::size_t i = 0; i < usable; ++i) {
    if (entries[i].token == token) return static_cast<long>(i);
  }
  return -1;
}

bool check_retokenization_safe(const WordPieceTokenizer& tokenizer,
                               const TokenSeq& tokens, std::size_t position,
                               std::string_view candidate) {
  TokenSeq edited = tokens.with_replacement(position, std::string(candidate));
  return tokenizer.tokenize(detokenize(edited)) == edited;
}

CandidateSet candidate_set(const Distribution& dist, const Vocabulary& vocab,
                           const StegoConfig& config,
                           const StopwordList& stopwords,
                           const CandidateFilter& filter) {
  CandidateSet out;
  std::size_t limit = std::min(dist.size(), vocab.size());
  for (std::size_t i = 0; i < limit; ++i) {
    double prob = dist[static_cast<TokenId>(i)];
    if (!(prob > config.p)) continue;
    const std::string& token = vocab.token(static_cast<TokenId>(i));
    if (is_special_token(token)) continue;
    if (!is_eligible(token, config, stopwords)) continue;
    out.entries.push_back({static_cast<TokenId>(i), token, prob});
  }
  std::sort(out.entries.begin(), out.entries.end(), candidate_precedes);
  if (filter) {
    std::erase_if(out.entries,
                  [&](const CandidateEntry& e) { return !filter(e.token); });
  }
  return out;
}

CandidateSet candidate_set(const Distribution& dist, const TokenSeq& tokens,
                           std::size_t position, const StegoConfig& config,
                           const StopwordList& stopwords,
                           const WordPieceTokenizer& tokenizer) {
  CandidateFilter filter;
  if (config.safe_mode) {
    filter = [&](std::string_view candidate) {
      return check_retokenization_safe(tokenizer, tokens, position, candidate);
    };
  }
  return candidate_set(dist, tokenizer.vocabulary(), config, stopwords, filter);
}

}  // namespace maskstego
