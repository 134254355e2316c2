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


#include "maskstego/table_backend.h"

#include <charconv>
#include <optional>

#include "maskstego/digest.h"
#include "maskstego/error.h"

namespace maskstego {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw StegoError(ErrorCode::kParse,
                   "table line " + std::to_string(line) + ": " + what);
}

// Parses a decimal that must run up to `end` or a comma.
std::optional<std::pair<double, std::size_t>> number_at(std::string_view s,
                                                       std::size_t at) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data() + at, s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data() + at) return std::nullopt;
  std::size_t next = static_cast<std::size_t>(ptr - s.data());
  if (next != s.size() && s[next] != ',') return std::nullopt;
  return std::make_pair(value, next);
}

}  // namespace

TableBackend TableBackend::load(const std::filesystem::path& path,
                                const Vocabulary& vocab) {
  return parse(read_file(path), vocab);
}

TableBackend TableBackend::parse(std::string_view contents,
                                 const Vocabulary& vocab) {
  TableBackend out;
  out.vocab_size_ = vocab.size();
  out.digest_ = sha256_hex(contents);

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::size_t tab1 = line.find('\t');
    std::size_t tab2 =
        tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) parse_error(line_no, "expected 3 fields");
    std::string id(line.substr(0, tab1));
    std::string_view pos_field = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string_view entries = line.substr(tab2 + 1);

    std::size_t position = 0;
    auto [pend, pec] = std::from_chars(
        pos_field.data(), pos_field.data() + pos_field.size(), position);
    if (pec != std::errc() || pend != pos_field.data() + pos_field.size() ||
        pos_field.empty()) {
      parse_error(line_no, "bad position '" + std::string(pos_field) + "'");
    }

    std::vector<double> probs(vocab.size(), 0.0);
    std::vector<bool> seen(vocab.size(), false);
    double total = 0.0;
    std::size_t at = 0;
    while (at < entries.size()) {
      // The token may itself contain ':' or ','; take the first ':' after a
      // non-empty token that is followed by a well-formed number.
      std::optional<std::pair<double, std::size_t>> parsed;
      std::size_t colon = at;
      while (true) {
        colon = entries.find(':', colon + 1);
        if (colon == std::string_view::npos) break;
        parsed = number_at(entries, colon + 1);
        if (parsed) break;
      }
      if (!parsed) parse_error(line_no, "malformed entry list");
      std::string_view token = entries.substr(at, colon - at);
      auto [prob, next] = *parsed;
      auto id_opt = vocab.find(token);
      if (!id_opt) parse_error(line_no, "unknown token '" + std::string(token) + "'");
      if (!(prob >= 0.0 && prob <= 1.0)) {
        parse_error(line_no, "probability out of range for '" +
                                 std::string(token) + "'");
      }
      if (seen[*id_opt]) parse_error(line_no, "duplicate token '" + std::string(token) + "'");
      seen[*id_opt] = true;
      probs[*id_opt] = prob;
      total += prob;
      at = next == entries.size() ? next : next + 1;
    }
    if (total > 1.0 + 1e-4) parse_error(line_no, "probabilities sum above 1");

    auto key = std::make_pair(std::move(id), position);
    if (out.records_.contains(key)) parse_error(line_no, "duplicate key");
    out.records_.emplace(std::move(key), Distribution(std::move(probs)));
  }
  return out;
}

const Distribution& TableBackend::lookup(const std::string& sentence_id,
                                         std::size_t position) const {
  auto it = records_.find(std::make_pair(sentence_id, position));
  if (it == records_.end()) {
    throw StegoError(ErrorCode::kBackend,
                     "no table entry for (\"" + sentence_id + "\", " +
                         std::to_string(position) + ")");
  }
  return it->second;
}

std::vector<Distribution> TableBackend::predict(
    const MaskedSentence& input) const {
  std::string key = input.key();
  std::vector<Distribution> out;
  out.reserve(input.positions.size());
  for (std::size_t pos : input.positions) out.push_back(lookup(key, pos));
  return out;
}

std::string format_table_record(const std::string& sentence_id,
                                std::size_t position, const Distribution& dist,
                                const Vocabulary& vocab) {
  std::string out = sentence_id + "\t" + std::to_string(position) + "\t";
  bool first = true;
  char buf[32];
  for (std::size_t i = 0; i < dist.size(); ++i) {
    double p = dist[static_cast<TokenId>(i)];
    if (p == 0.0) continue;
    if (!first) out.push_back(',');
    first = false;
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p);
    out += vocab.token(static_cast<TokenId>(i));
    out.push_back(':');
    out.append(buf, end);
  }
  return out;
}

}  // namespace maskstego
