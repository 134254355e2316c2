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

#ifndef MASKSTEGO_BACKEND_H_
#define MASKSTEGO_BACKEND_H_

#include <cstddef>
#include <string>
#include <vector>

#include "maskstego/token_seq.h"
#include "maskstego/types.h"

namespace maskstego {

// Probability per vocabulary index, dense.
class Distribution {
 public:
  Distribution() = default;

  // Checks every entry lies in [0, 1] and the total is at most 1 + 1e-4;
  // throws StegoError(kBackend) otherwise. Sparse sources (the table stub)
  // may leave mass unassigned; dense sources normalize to 1.
  explicit Distribution(std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  double operator[](TokenId id) const { return probabilities_[id]; }
  double total() const;
  const std::vector<double>& probabilities() const { return probabilities_; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probabilities_;
};

// One sentence with [MASK] at every planned position.
struct MaskedSentence {
  std::vector<std::string> pieces;
  std::vector<std::size_t> positions;

  // Pieces joined by single spaces; the table stub's sentence id.
  std::string key() const;
};

MaskedSentence mask_sentence(const TokenSeq& tokens, const MaskPlan& plan);

// Source of per-mask vocabulary distributions. predict must be a pure
// function of the backend identity and its input, and callable from several
// threads at once.
class LanguageModelBackend {
 public:
  virtual ~LanguageModelBackend() = default;

  // One distribution per masked position, in plan order.
  virtual std::vector<Distribution> predict(const MaskedSentence& input) const = 0;

  virtual std::size_t vocab_size() const = 0;

  // Stable description recorded in the protocol descriptor, e.g.
  // "hash:42" or "model:<sha256>".
  virtual std::string identity() const = 0;
};

}  // namespace maskstego

#endif  // MASKSTEGO_BACKEND_H_
