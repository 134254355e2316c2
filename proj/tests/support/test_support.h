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


#ifndef MASKSTEGO_TESTS_SUPPORT_TEST_SUPPORT_H_
#define MASKSTEGO_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "maskstego/codec.h"
#include "maskstego/config.h"
#include "maskstego/stopwords.h"
#include "maskstego/tokenizer.h"
#include "maskstego/vocabulary.h"

namespace maskstego::testing {

std::filesystem::path fixtures_dir();
std::filesystem::path data_dir();
std::filesystem::path stopwords_path();
std::filesystem::path vocab_path();

// Fixture vocabulary, its tokenizer and the shipped stopword list, loaded
// once per process.
struct TestResources {
  Vocabulary vocab;
  WordPieceTokenizer tokenizer;
  StopwordList stopwords;

  TestResources();
  TestResources(const TestResources&) = delete;
  TestResources& operator=(const TestResources&) = delete;

  SharedResources with(const LanguageModelBackend& backend) const {
    return {tokenizer, stopwords, backend};
  }
};
const TestResources& resources();

// Uniform index in [0, n) without std distributions, so sequences are the
// same on every standard library.
inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}
inline double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[pick(rng, i)]);
  }
}

// word -> grammatical class, from lexicon.tsv.
class Lexicon {
 public:
  static const Lexicon& get();

  const std::vector<std::string>& members(const std::string& cls) const;
  // Class of the lowercased word, or empty.
  std::string class_of(const std::string& word) const;

  static bool is_function_class(const std::string& cls);

 private:
  std::map<std::string, std::vector<std::string>> members_;
  std::map<std::string, std::string> class_of_;
};

// Template sentences from the lexicon: capitalized, single spaced, ending in
// '.', '!' or '?', occasionally with commas or plural nouns.
std::string synthetic_sentence(std::mt19937_64& rng);

// Two to four such clauses joined by a comma and a conjunction, closer to
// the sentence length of ordinary prose.
std::string synthetic_long_sentence(std::mt19937_64& rng);

// `documents` paragraphs of `sentences` sentences each.
std::vector<std::string> synthetic_corpus(std::size_t documents,
                                          std::size_t sentences,
                                          std::uint64_t seed,
                                          bool long_sentences = false);

// Table-backend contents giving every planned position of `corpus`, under
// each of `configs`, a distribution shaped by the class of the cover token.
// Function-word slots are sharply peaked on the cover token (top probability
// drawn from [0.85, 0.995], the remainder decaying by a factor 0.3 over the
// other members of the class); content-word slots follow a 1/k law over up
// to 30 members of the class. Tokens outside the lexicon get all mass.
// Members keep the capitalization of the cover token.
std::string class_table(const std::vector<std::string>& corpus,
                        const std::vector<StegoConfig>& configs,
                        std::uint64_t seed);

}  // namespace maskstego::testing

#endif  // MASKSTEGO_TESTS_SUPPORT_TEST_SUPPORT_H_
