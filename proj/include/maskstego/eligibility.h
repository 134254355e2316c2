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

#ifndef MASKSTEGO_ELIGIBILITY_H_
#define MASKSTEGO_ELIGIBILITY_H_

#include <string_view>

#include "maskstego/config.h"
#include "maskstego/stopwords.h"

namespace maskstego {

enum class EligibilityClass {
  kEligible,
  kPunctOrNumber,
  kStopword,
  kContinuationSubword,
  kCapitalized,
};

std::string_view to_string(EligibilityClass cls);

// First matching class in the order continuation subword, punctuation or
// number, stopword, capitalized; a class is reported only when its skip flag
// is on.
//
//   continuation subword: the piece starts with "##"
//   punctuation/number:   no alphabetic character at all
//   stopword:             the piece is in `stopwords` (case-insensitive)
//   capitalized:          at least one uppercase letter
EligibilityClass classify(std::string_view token, const StegoConfig& config,
                          const StopwordList& stopwords);

inline bool is_eligible(std::string_view token, const StegoConfig& config,
                        const StopwordList& stopwords) {
  return classify(token, config, stopwords) == EligibilityClass::kEligible;
}

}  // namespace maskstego

#endif  // MASKSTEGO_ELIGIBILITY_H_
