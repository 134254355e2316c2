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


#ifndef MASKSTEGO_CANDIDATES_H_
#define MASKSTEGO_CANDIDATES_H_

#include <cstddef>
#include <functional>
#include <string_view>

#include "maskstego/backend.h"
#include "maskstego/config.h"
#include "maskstego/stopwords.h"
#include "maskstego/token_seq.h"
#include "maskstego/tokenizer.h"
#include "maskstego/types.h"

namespace maskstego {

// True iff tokenize(detokenize(tokens with `candidate` at `position`)) equals
// `tokens` with only that position replaced.
bool check_retokenization_safe(const WordPieceTokenizer& tokenizer,
                               const TokenSeq& tokens, std::size_t position,
                               std::string_view candidate);

// Extra acceptance test applied to each candidate after the threshold and
// eligibility filters. An empty filter accepts everything.
using CandidateFilter = std::function<bool(std::string_view candidate)>;

// Vocabulary entries with probability strictly above config.p that classify
// as eligible, are not special tokens, and pass `filter`; sorted by
// candidate_precedes.
CandidateSet candidate_set(const Distribution& dist, const Vocabulary& vocab,
                           const StegoConfig& config,
                           const StopwordList& stopwords,
                           const CandidateFilter& filter = {});

// As above; in safe mode the filter is check_retokenization_safe against
// `tokens` at `position`.
CandidateSet candidate_set(const Distribution& dist, const TokenSeq& tokens,
                           std::size_t position, const StegoConfig& config,
                           const StopwordList& stopwords,
                           const WordPieceTokenizer& tokenizer);

}  // namespace maskstego

#endif  // MASKSTEGO_CANDIDATES_H_
