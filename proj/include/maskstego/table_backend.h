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


#ifndef MASKSTEGO_TABLE_BACKEND_H_
#define MASKSTEGO_TABLE_BACKEND_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maskstego/backend.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

// Backend answering from a fixed table of records
//
//   sentence_id <TAB> position <TAB> token:prob,token:prob,...
//
// At predict time the sentence id is MaskedSentence::key(), the masked
// pieces joined by single spaces. Unlisted tokens get probability zero, so a
// record may leave part of the mass unassigned.
class TableBackend final : public LanguageModelBackend {
 public:
  // Throws StegoError(kParse) on malformed records, unknown tokens,
  // probabilities outside [0, 1], duplicate keys, or rows summing above one.
  static TableBackend load(const std::filesystem::path& path,
                           const Vocabulary& vocab);
  static TableBackend parse(std::string_view contents, const Vocabulary& vocab);

  std::vector<Distribution> predict(const MaskedSentence& input) const override;
  std::size_t vocab_size() const override { return vocab_size_; }
  std::string identity() const override { return "table:" + digest_; }

  // Throws StegoError(kBackend) when the key is absent.
  const Distribution& lookup(const std::string& sentence_id,
                             std::size_t position) const;
  std::size_t record_count() const { return records_.size(); }

 private:
  std::size_t vocab_size_ = 0;
  std::map<std::pair<std::string, std::size_t>, Distribution, std::less<>>
      records_;
  std::string digest_;
};

// Serializes one record in the table format, listing nonzero entries in
// vocabulary order.
std::string format_table_record(const std::string& sentence_id,
                                std::size_t position, const Distribution& dist,
                                const Vocabulary& vocab);

}  // namespace maskstego

#endif  // MASKSTEGO_TABLE_BACKEND_H_
