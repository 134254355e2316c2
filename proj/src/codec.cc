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


#include "maskstego/codec.h"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "maskstego/candidates.h"
#include "maskstego/error.h"
#include "maskstego/mask_planner.h"
#include "maskstego/sentence_splitter.h"
#include "maskstego/unicode.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

namespace {

// Probe words standing in for a following chunk whose final form one side
// cannot see yet.
constexpr std::string_view kUpperProbe = "Xx";
constexpr std::string_view kLowerProbe = "xx";

struct ByteRange {
  std::size_t begin;
  std::size_t end;
};

std::vector<ByteRange> whitespace_chunks(std::string_view text) {
  std::vector<ByteRange> chunks;
  std::size_t begin = std::string_view::npos;
  for (const auto& cp : unicode::decode(text)) {
    if (unicode::is_whitespace(cp.value)) {
      if (begin != std::string_view::npos) chunks.push_back({begin, cp.offset});
      begin = std::string_view::npos;
    } else if (begin == std::string_view::npos) {
      begin = cp.offset;
    }
  }
  if (begin != std::string_view::npos) chunks.push_back({begin, text.size()});
  return chunks;
}

std::string last_chunk(std::string_view text) {
  auto chunks = whitespace_chunks(text);
  if (chunks.empty()) return {};
  return std::string(
      text.substr(chunks.back().begin, chunks.back().end - chunks.back().begin));
}

// One sentence being encoded or decoded: its source text, the tokens as
// read, and the tokens with any substitutions made so far.
class SentenceWork {
 public:
  SentenceWork(std::string_view text, const WordPieceTokenizer& tokenizer)
      : text_(text),
        original_(tokenizer.tokenize(text)),
        current_(original_),
        chunks_(whitespace_chunks(text)) {
    chunk_of_.resize(original_.size());
    chunk_tokens_.assign(chunks_.size(), {0, 0});
    std::size_t c = 0;
    for (std::size_t i = 0; i < original_.size(); ++i) {
      while (original_[i].begin >= chunks_[c].end) ++c;
      if (chunk_tokens_[c].second == 0) chunk_tokens_[c].first = i;
      chunk_tokens_[c].second = i + 1;
      chunk_of_[i] = c;
    }
  }

  const TokenSeq& original() const { return original_; }
  const TokenSeq& current() const { return current_; }
  std::size_t chunk_count() const { return chunks_.size(); }
  std::size_t chunk_of(std::size_t token) const { return chunk_of_[token]; }
  std::pair<std::size_t, std::size_t> chunk_tokens(std::size_t c) const {
    return chunk_tokens_[c];
  }

  void replace(std::size_t position, const std::string& piece) {
    current_.replace(position, piece);
  }

  // Source text of [begin, end) with substitutions spliced in; the token at
  // `override_pos`, if any, renders as `override_surface`.
  std::string render(std::size_t begin, std::size_t end,
                     std::size_t override_pos = kNoOffset,
                     std::string_view override_surface = {}) const {
    std::string out;
    std::size_t at = begin;
    for (std::size_t i = 0; i < current_.size(); ++i) {
      const Token& orig = original_[i];
      if (orig.begin < begin || orig.begin >= end) continue;
      bool changed = current_[i].piece != orig.piece;
      if (i != override_pos && !changed) continue;
      out.append(text_.substr(at, orig.begin - at));
      out.append(i == override_pos ? override_surface
                                   : std::string_view(current_[i].surface));
      at = orig.end;
    }
    out.append(text_.substr(at, end - at));
    return out;
  }

  std::string render_chunk(std::size_t c, std::size_t override_pos = kNoOffset,
                           std::string_view override_surface = {}) const {
    return render(chunks_[c].begin, chunks_[c].end, override_pos,
                  override_surface);
  }

  std::string render_all() const { return render(0, text_.size()); }

 private:
  std::string_view text_;
  TokenSeq original_;
  TokenSeq current_;
  std::vector<ByteRange> chunks_;
  std::vector<std::size_t> chunk_of_;
  std::vector<std::pair<std::size_t, std::size_t>> chunk_tokens_;
};

// Builds the safe-mode filter for plan entry `k`, or returns false when the
// position cannot carry bits at all.
bool safe_filter(const SentenceWork& work, const MaskPlan& plan, std::size_t k,
                 std::string_view previous_chunk,
                 const WordPieceTokenizer& tokenizer, CandidateFilter& filter) {
  const std::size_t pos = plan.positions[k];
  const std::size_t c = work.chunk_of(pos);
  for (std::size_t j = k + 1; j < plan.size(); ++j) {
    if (work.chunk_of(plan.positions[j]) == c) return false;
  }

  std::string current = work.render_chunk(c);
  std::string left = c > 0 ? work.render_chunk(c - 1) : std::string(previous_chunk);
  std::vector<std::string> rights;
  bool next_is_final = c + 1 < work.chunk_count() &&
                       std::none_of(plan.positions.begin() + static_cast<long>(k) + 1,
                                    plan.positions.end(), [&](std::size_t p) {
                                      return work.chunk_of(p) == c + 1;
                                    });
  if (next_is_final) {
    rights.push_back(work.render_chunk(c + 1));
  } else {
    rights.emplace_back(kUpperProbe);
    rights.emplace_back(kLowerProbe);
  }

  auto [first, last] = work.chunk_tokens(c);
  std::vector<std::string> expected;
  for (std::size_t i = first; i < last; ++i) {
    expected.push_back(work.current()[i].piece);
  }
  const std::size_t slot = pos - first;

  bool left_before = !left.empty() && is_sentence_boundary(left, current);
  std::vector<bool> right_before;
  for (const auto& r : rights) right_before.push_back(is_sentence_boundary(current, r));

  filter = [=, &work, &tokenizer](std::string_view candidate) mutable {
    std::string text = work.render_chunk(c, pos, strip_continuation(candidate));
    expected[slot] = std::string(candidate);
    if (tokenizer.tokenize(text).pieces() != expected) return false;
    if (!left.empty() && is_sentence_boundary(left, text) != left_before) {
      return false;
    }
    for (std::size_t r = 0; r < rights.size(); ++r) {
      if (is_sentence_boundary(text, rights[r]) != right_before[r]) return false;
    }
    return true;
  };
  return true;
}

// Visits each planned position of `work` in order with its candidate set.
// `visit` may substitute the token and returns false to stop early.
void walk_sentence(
    SentenceWork& work, const StegoConfig& config, const SharedResources& res,
    std::string_view previous_chunk,
    const std::function<bool(std::size_t, const CandidateSet&)>& visit) {
  MaskPlan plan = compute_mask_plan(work.original(), config, res.stopwords);
  if (plan.empty()) return;
  std::vector<Distribution> dists =
      res.backend.predict(mask_sentence(work.original(), plan));
  if (dists.size() != plan.size()) {
    throw StegoError(ErrorCode::kBackend,
                     "backend returned " + std::to_string(dists.size()) +
                         " distributions for " + std::to_string(plan.size()) +
                         " masks");
  }
  const Vocabulary& vocab = res.tokenizer.vocabulary();
  for (std::size_t k = 0; k < plan.size(); ++k) {
    if (dists[k].size() != vocab.size()) {
      throw StegoError(ErrorCode::kBackend,
                       "distribution size " + std::to_string(dists[k].size()) +
                           " does not match vocabulary size " +
                           std::to_string(vocab.size()));
    }
    CandidateSet set;
    CandidateFilter filter;
    bool usable = !config.safe_mode ||
                  safe_filter(work, plan, k, previous_chunk, res.tokenizer, filter);
    if (usable) set = candidate_set(dists[k], vocab, config, res.stopwords, filter);
    if (!visit(plan.positions[k], set)) return;
  }
}

}  // namespace

std::uint64_t BitCursor::read(int n) {
  std::uint64_t value = 0;
  for (int i = 0; i < n; ++i) {
    bool bit = offset_ < message_.size() && message_[offset_];
    value = (value << 1) | (bit ? 1u : 0u);
    ++offset_;
  }
  return value;
}

BitString frame_message(const BitString& message, const Framing& framing) {
  if (message.empty()) {
    throw StegoError(ErrorCode::kInvalidConfig, "message is empty");
  }
  if (const auto* fixed = std::get_if<FixedFraming>(&framing)) {
    if (message.size() != fixed->bit_count) {
      throw StegoError(ErrorCode::kInvalidConfig,
                       "message has " + std::to_string(message.size()) +
                           " bits, fixed framing expects " +
                           std::to_string(fixed->bit_count));
    }
    return message;
  }
  const auto& header = std::get<HeaderFraming>(framing);
  if (header.width < 64 && message.size() >> header.width != 0) {
    throw StegoError(ErrorCode::kInvalidConfig,
                     "message too long for a " + std::to_string(header.width) +
                         "-bit header");
  }
  BitString out = BitString::from_uint(message.size(), header.width);
  out.append(message);
  return out;
}

Codec::Codec(const StegoConfig& config, SharedResources resources)
    : config_(validate_config(config)), res_(resources) {
  if (res_.backend.vocab_size() != res_.tokenizer.vocabulary().size()) {
    throw StegoError(ErrorCode::kBackend,
                     "backend vocabulary size " +
                         std::to_string(res_.backend.vocab_size()) +
                         " differs from tokenizer vocabulary size " +
                         std::to_string(res_.tokenizer.vocabulary().size()));
  }
}

SentenceEncoding Codec::encode_sentence(std::string_view sentence,
                                        BitCursor& cursor,
                                        std::string_view previous_chunk) const {
  SentenceWork work(sentence, res_.tokenizer);
  SentenceEncoding out;
  walk_sentence(work, config_, res_, previous_chunk,
                [&](std::size_t pos, const CandidateSet& set) {
                  if (cursor.exhausted()) return false;
                  ++out.positions_planned;
                  int n = set.n();
                  if (n == 0) {
                    ++out.positions_zero_capacity;
                    return true;
                  }
                  auto index = static_cast<std::size_t>(cursor.read(n));
                  work.replace(pos, set.entries[index].token);
                  ++out.positions_edited;
                  return true;
                });
  out.tokens = work.current();
  out.text = work.render_all();
  return out;
}

std::vector<CandidateSet> Codec::candidate_sets(
    std::string_view sentence, std::string_view previous_chunk) const {
  SentenceWork work(sentence, res_.tokenizer);
  std::vector<CandidateSet> out;
  walk_sentence(work, config_, res_, previous_chunk,
                [&](std::size_t, const CandidateSet& set) {
                  out.push_back(set);
                  return true;
                });
  return out;
}

StegoResult Codec::encode(std::string_view cover,
                          const BitString& message) const {
  BitCursor cursor(frame_message(message, config_.framing));
  StegoResult result;
  result.message_bits = cursor.message().size();

  std::string previous_chunk;
  std::size_t emitted_end = 0;
  for (const SentenceSpan& span : sentence_spans(cover)) {
    if (cursor.exhausted()) break;
    result.stego_text.append(cover.substr(emitted_end, span.begin - emitted_end));
    SentenceEncoding enc = encode_sentence(
        cover.substr(span.begin, span.end - span.begin), cursor, previous_chunk);
    result.stego_text += enc.text;
    emitted_end = span.end;
    previous_chunk = last_chunk(enc.text);
    ++result.sentences_used;
    result.positions_planned += enc.positions_planned;
    result.positions_edited += enc.positions_edited;
    result.positions_zero_capacity += enc.positions_zero_capacity;
  }
  if (!cursor.exhausted()) {
    throw CapacityExhausted(cursor.offset(), cursor.message().size());
  }
  result.bits_embedded = cursor.offset();
  result.padding_bits = cursor.padding();
  return result;
}

BitString Codec::decode(std::string_view stego) const {
  const auto* fixed = std::get_if<FixedFraming>(&config_.framing);
  const std::size_t header_width =
      fixed ? 0 : std::get<HeaderFraming>(config_.framing).width;
  BitString bits;

  auto target = [&]() -> std::size_t {
    if (fixed) return fixed->bit_count;
    if (bits.size() < header_width) return header_width + 1;
    return header_width + bits.read_uint(0, header_width);
  };
  auto done = [&] { return bits.size() >= target(); };

  std::string previous_chunk;
  for (const SentenceSpan& span : sentence_spans(stego)) {
    if (done()) break;
    std::string_view sentence = stego.substr(span.begin, span.end - span.begin);
    SentenceWork work(sentence, res_.tokenizer);
    walk_sentence(work, config_, res_, previous_chunk,
                  [&](std::size_t pos, const CandidateSet& set) {
                    if (done()) return false;
                    int n = set.n();
                    if (n == 0) return true;
                    long rank = set.rank_of(work.current()[pos].piece);
                    if (rank < 0) {
                      throw StegoError(
                          ErrorCode::kDecodeMismatch,
                          "token '" + work.current()[pos].piece +
                              "' at position " + std::to_string(pos) +
                              " is not among the " + std::to_string(1u << n) +
                              " usable candidates");
                    }
                    bits.append_uint(static_cast<std::uint64_t>(rank),
                                     static_cast<std::size_t>(n));
                    return true;
                  });
    previous_chunk = last_chunk(sentence);
  }

  if (!done()) {
    if (fixed) {
      throw StegoError(ErrorCode::kMessageUnderflow,
                       "recovered " + std::to_string(bits.size()) + " of " +
                           std::to_string(fixed->bit_count) + " bits");
    }
    throw StegoError(ErrorCode::kHeaderUnderflow,
                     "recovered " + std::to_string(bits.size()) +
                         " bits, header framing needs " +
                         std::to_string(target()));
  }
  if (fixed) return bits.prefix(fixed->bit_count);
  return bits.slice(header_width, target() - header_width);
}

}  // namespace maskstego
