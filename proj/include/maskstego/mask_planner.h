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

#ifndef MASKSTEGO_MASK_PLANNER_H_
#define MASKSTEGO_MASK_PLANNER_H_

#include "maskstego/config.h"
#include "maskstego/stopwords.h"
#include "maskstego/token_seq.h"
#include "maskstego/types.h"

namespace maskstego {

// Positions to mask in one sentence. Scanning left to right, a counter
// advances on eligible tokens only and every f-th eligible token is masked
// (eligible ordinals f, 2f, 3f, ...). Skipped tokens never move the counter,
// so substituting an eligible token at a planned position for another
// eligible token leaves the plan unchanged.
MaskPlan compute_mask_plan(const TokenSeq& tokens, const StegoConfig& config,
                           const StopwordList& stopwords);

}  // namespace maskstego

#endif  // MASKSTEGO_MASK_PLANNER_H_
