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

#include "maskstego/eligibility.h"

#include "maskstego/token_seq.h"
#include "maskstego/unicode.h"

namespace maskstego {

std::string_view to_string(EligibilityClass cls) {
  switch (cls) {
    case EligibilityClass::kEligible:
      return "eligible";
    case EligibilityClass::kPunctOrNumber:
      return "punct_or_number";
    case EligibilityClass::kStopword:
      return "stopword";
    case EligibilityClass::kContinuationSubword:
      return "continuation_subword";
    case EligibilityClass::kCapitalized:
      return "capitalized";
  }
  return "unknown";
}

EligibilityClass classify(std::string_view token, const StegoConfig& config,
                          const StopwordList& stopwords) {
  if (config.skip_subwords && is_continuation_piece(token)) {
    return EligibilityClass::kContinuationSubword;
  }
  if (config.skip_punct_num && !unicode::has_alphabetic(token)) {
    return EligibilityClass::kPunctOrNumber;
  }
  if (config.skip_stopwords && stopwords.contains(token)) {
    return EligibilityClass::kStopword;
  }
  if (config.skip_capitalized && unicode::has_uppercase(token)) {
    return EligibilityClass::kCapitalized;
  }
  return EligibilityClass::kEligible;
}

}  // namespace maskstego
