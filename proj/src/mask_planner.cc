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

#include "maskstego/mask_planner.h"

#include "maskstego/eligibility.h"

namespace maskstego {

MaskPlan compute_mask_plan(const TokenSeq& tokens, const StegoConfig& config,
                           const StopwordList& stopwords) {
  MaskPlan plan;
  std::size_t eligible_seen = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_eligible(tokens[i].piece, config, stopwords)) continue;
    ++eligible_seen;
    if (eligible_seen % config.f == 0) plan.positions.push_back(i);
  }
  return plan;
}

}  // namespace maskstego
