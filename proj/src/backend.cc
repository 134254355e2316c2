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

#include "maskstego/backend.h"

#include <cmath>
#include <numeric>

#include "maskstego/error.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

Distribution::Distribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  for (double p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw StegoError(ErrorCode::kBackend,
                       "probability outside [0, 1]: " + std::to_string(p));
    }
  }
  if (total() > 1.0 + 1e-4) {
    throw StegoError(ErrorCode::kBackend,
                     "probabilities sum to " + std::to_string(total()));
  }
}

double Distribution::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

std::string MaskedSentence::key() const {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += pieces[i];
  }
  return out;
}

MaskedSentence mask_sentence(const TokenSeq& tokens, const MaskPlan& plan) {
  MaskedSentence out;
  out.pieces = tokens.pieces();
  out.positions = plan.positions;
  for (std::size_t pos : plan.positions) out.pieces.at(pos) = kMaskToken;
  return out;
}

}  // namespace maskstego
