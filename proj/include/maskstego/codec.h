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


#ifndef MASKSTEGO_CODEC_H_
#define MASKSTEGO_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "maskstego/backend.h"
#include "maskstego/bitstring.h"
#include "maskstego/config.h"
#include "maskstego/stopwords.h"
#include "maskstego/token_seq.h"
#include "maskstego/tokenizer.h"
#include "maskstego/types.h"

namespace maskstego {

// Sequential reader over the framed message. Reads past the end yield zero
// bits, which are counted as padding.
class BitCursor {
 public:
  explicit BitCursor(BitString message) : message_(std::move(message)) {}

  // Next `n` bits as a big-endian value; n <= 64.
  std::uint64_t read(int n);

  std::size_t offset() const { return offset_; }
  std::size_t padding() const {
    return offset_ > message_.size() ? offset_ - message_.size() : 0;
  }
  bool exhausted() const { return offset_ >= message_.size(); }
  const BitString& message() const { return message_; }

 private:
  BitString message_;
  std::size_t offset_ = 0;
};

// Prepends the length header in header framing; in fixed framing checks the
// message length equals the agreed bit count. Throws
// StegoError(kInvalidConfig) on an empty or wrongly sized message.
BitString frame_message(const BitString& message, const Framing& framing);

// Resources both parties load identically. All must outlive the codec.
struct SharedResources {
  const WordPieceTokenizer& tokenizer;
  const StopwordList& stopwords;
  const LanguageModelBackend& backend;
};

// Per-sentence outcome of encoding.
struct SentenceEncoding {
  TokenSeq tokens;   // after substitution
  std::string text;  // the sentence with substitutions spliced in
  std::size_t positions_planned = 0;
  std::size_t positions_edited = 0;
  std::size_t positions_zero_capacity = 0;
};

// Encoder and decoder for one shared configuration.
//
// Each sentence is tokenized, its mask plan computed, and all planned
// positions masked at once for a single backend call. Positions are then
// visited in order. At each one the candidate set is built from the
// distribution; with n = 0 the current token stays, otherwise the next n
// message bits select the candidate at that big-endian rank. The decoder
// repeats the same steps on the stego text and reads each stego token's rank.
//
// In safe mode a candidate is kept only if the receiver is guaranteed to
// rebuild the same sentence, tokens and candidate set. Let the chunk of a
// position be the whitespace-delimited stretch of text that holds it. Then:
//   * a position whose chunk also holds a later planned position has no
//     candidates;
//   * the chunk with the candidate spliced in must tokenize to the chunk's
//     current pieces with only that position replaced;
//   * is_sentence_boundary must decide the gaps on either side of the chunk
//     the same way with the candidate as with the current token. The gap
//     after is tested against the actual next chunk when it lies in the same
//     sentence and holds no planned position, and otherwise against both an
//     uppercase and a lowercase probe word.
// Each check reads only text that is final on both sides.
class Codec {
 public:
  // Throws StegoError(kInvalidConfig) for an invalid config and
  // StegoError(kBackend) when the backend and tokenizer vocabularies differ
  // in size.
  Codec(const StegoConfig& config, SharedResources resources);

  const StegoConfig& config() const { return config_; }

  // Embeds `message` in the leading sentences of `cover`. The stego text is
  // the cover up to the end of the last sentence used, with substitutions
  // spliced in and all original whitespace kept. Throws CapacityExhausted
  // when the cover runs out first.
  StegoResult encode(std::string_view cover, const BitString& message) const;

  // Recovers the message. Throws StegoError with kDecodeMismatch when a
  // stego token is not among the usable candidates, kHeaderUnderflow or
  // kMessageUnderflow when the text carries too few bits.
  BitString decode(std::string_view stego) const;

  // Encodes a single sentence. `previous_chunk` is the last
  // whitespace-delimited chunk of the text before it, empty at the start.
  SentenceEncoding encode_sentence(std::string_view sentence, BitCursor& cursor,
                                   std::string_view previous_chunk = {}) const;

  // Candidate sets the decoder sees for a stego sentence, one per planned
  // position; exposed for inspection and tests.
  std::vector<CandidateSet> candidate_sets(
      std::string_view sentence, std::string_view previous_chunk = {}) const;

 private:
  StegoConfig config_;
  SharedResources res_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_CODEC_H_
