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


#include "test_support.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "maskstego/backend.h"
#include "maskstego/digest.h"
#include "maskstego/hash_backend.h"
#include "maskstego/mask_planner.h"
#include "maskstego/sentence_splitter.h"
#include "maskstego/table_backend.h"

namespace maskstego::testing {

std::filesystem::path fixtures_dir() { return MASKSTEGO_TEST_FIXTURES; }
std::filesystem::path data_dir() { return MASKSTEGO_TEST_DATA; }
std::filesystem::path stopwords_path() { return data_dir() / "stopwords_en.txt"; }
std::filesystem::path vocab_path() { return fixtures_dir() / "vocab.txt"; }

TestResources::TestResources()
    : vocab(Vocabulary::load(vocab_path())),
      tokenizer(vocab),
      stopwords(StopwordList::load(stopwords_path())) {}

const TestResources& resources() {
  static const TestResources instance;
  return instance;
}

const Lexicon& Lexicon::get() {
  static const Lexicon instance = [] {
    Lexicon lex;
    std::istringstream in(read_file(fixtures_dir() / "lexicon.tsv"));
    std::string line;
    while (std::getline(in, line)) {
      auto tab = line.find('\t');
      if (tab == std::string::npos) continue;
      std::string word = line.substr(0, tab);
      std::string cls = line.substr(tab + 1);
      lex.members_[cls].push_back(word);
      lex.class_of_.emplace(word, cls);
    }
    return lex;
  }();
  return instance;
}

const std::vector<std::string>& Lexicon::members(const std::string& cls) const {
  return members_.at(cls);
}

std::string Lexicon::class_of(const std::string& word) const {
  std::string lower = word;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto it = class_of_.find(word);
  if (it == class_of_.end()) it = class_of_.find(lower);
  return it == class_of_.end() ? std::string() : it->second;
}

bool Lexicon::is_function_class(const std::string& cls) {
  static const std::set<std::string> kFunction = {"DET", "PREP", "PRON",
                                                  "OBJ", "AUX",  "CONJ"};
  return kFunction.contains(cls);
}

namespace {

std::string capitalize(std::string word) {
  if (!word.empty()) word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  return word;
}

bool is_capitalized(const std::string& word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word[0]));
}

// Lowercase single-piece members only, so templates stay grammatical.
const std::string& word_of(std::mt19937_64& rng, const std::string& cls) {
  const auto& m = Lexicon::get().members(cls);
  return m[pick(rng, m.size())];
}

}  // namespace

namespace {

std::vector<std::string> clause_words(std::mt19937_64& rng) {
  auto noun = [&] {
    std::string n = word_of(rng, "NOUN");
    if (pick(rng, 4) == 0) n += "s";
    return n;
  };
  std::vector<std::string> w;
  switch (pick(rng, 5)) {
    case 0:
      w = {word_of(rng, "DET"), word_of(rng, "ADJ"), noun(),
           word_of(rng, "VERB_PAST"), word_of(rng, "DET"), noun(),
           word_of(rng, "PREP"), word_of(rng, "DET"), word_of(rng, "ADJ"), noun()};
      break;
    case 1:
      w = {word_of(rng, "NAME"), word_of(rng, "AUX"), word_of(rng, "VERB_BASE"),
           word_of(rng, "OBJ"), word_of(rng, "ADV"), word_of(rng, "PREP"),
           word_of(rng, "DET"), noun()};
      break;
    case 2:
      w = {word_of(rng, "PRON"), word_of(rng, "VERB_PAST"), word_of(rng, "DET"),
           word_of(rng, "ADJ"), noun() + ",", word_of(rng, "CONJ"),
           word_of(rng, "PRON"), word_of(rng, "VERB_PAST"), word_of(rng, "DET"),
           noun()};
      break;
    case 3:
      w = {word_of(rng, "DET"), noun(), word_of(rng, "PREP"),
           word_of(rng, "NAME"), word_of(rng, "AUX"), word_of(rng, "ADV"),
           word_of(rng, "ADJ"), word_of(rng, "CONJ"), word_of(rng, "ADJ")};
      break;
    default:
      w = {word_of(rng, "ADV"), word_of(rng, "PRON"), word_of(rng, "VERB_PAST"),
           word_of(rng, "DET"), word_of(rng, "ADJ"), noun(), word_of(rng, "PREP"),
           word_of(rng, "NAME"), word_of(rng, "CONJ"), word_of(rng, "DET"),
           word_of(rng, "ADJ"), noun()};
      break;
  }
  return w;
}

std::string finish_sentence(std::vector<std::string> w, std::mt19937_64& rng) {
  w.front() = capitalize(w.front());
  static constexpr const char* kEnds[] = {".", ".", ".", ".", "!", "?"};
  std::string out;
  for (const auto& word : w) {
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out + kEnds[pick(rng, std::size(kEnds))];
}

}  // namespace

std::string synthetic_sentence(std::mt19937_64& rng) {
  return finish_sentence(clause_words(rng), rng);
}

std::string synthetic_long_sentence(std::mt19937_64& rng) {
  std::vector<std::string> w = clause_words(rng);
  std::size_t clauses = 2 + pick(rng, 3);
  for (std::size_t c = 1; c < clauses; ++c) {
    w.back() += ",";
    w.push_back(word_of(rng, "CONJ"));
    auto more = clause_words(rng);
    w.insert(w.end(), more.begin(), more.end());
  }
  return finish_sentence(std::move(w), rng);
}

std::vector<std::string> synthetic_corpus(std::size_t documents,
                                          std::size_t sentences,
                                          std::uint64_t seed,
                                          bool long_sentences) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> corpus;
  for (std::size_t d = 0; d < documents; ++d) {
    std::string doc;
    for (std::size_t s = 0; s < sentences; ++s) {
      if (!doc.empty()) doc.push_back(' ');
      doc += long_sentences ? synthetic_long_sentence(rng) : synthetic_sentence(rng);
    }
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

namespace {

Distribution slot_distribution(const std::string& original,
                               std::mt19937_64& rng, const Vocabulary& vocab) {
  std::vector<double> probs(vocab.size(), 0.0);
  const Lexicon& lex = Lexicon::get();
  std::string cls = lex.class_of(original);
  auto set = [&](const std::string& token, double p) {
    if (auto id = vocab.find(token)) probs[*id] = p;
  };
  if (cls.empty()) {
    set(original, 1.0);
    return Distribution(std::move(probs));
  }

  std::vector<std::string> others;
  for (const auto& m : lex.members(cls)) {
    std::string form = is_capitalized(original) && cls != "NAME" ? capitalize(m) : m;
    if (form != original && vocab.contains(form)) others.push_back(form);
  }
  shuffle(others, rng);

  if (Lexicon::is_function_class(cls)) {
    double top = 0.85 + 0.145 * uniform(rng);
    set(original, top);
    double share = (1.0 - top) * 0.7;
    for (const auto& m : others) {
      set(m, share);
      share *= 0.3;
    }
  } else {
    if (others.size() > 29) others.resize(29);
    others.insert(others.begin() + static_cast<long>(pick(rng, others.size() + 1)),
                  original);
    double harmonic = 0.0;
    for (std::size_t k = 1; k <= others.size(); ++k) harmonic += 1.0 / static_cast<double>(k);
    for (std::size_t k = 0; k < others.size(); ++k) {
      set(others[k], 1.0 / (static_cast<double>(k + 1) * harmonic));
    }
  }
  return Distribution(std::move(probs));
}

}  // namespace

std::string class_table(const std::vector<std::string>& corpus,
                        const std::vector<StegoConfig>& configs,
                        std::uint64_t seed) {
  const TestResources& res = resources();
  std::set<std::pair<std::string, std::size_t>> seen;
  std::string out;
  for (const auto& config : configs) {
    for (const auto& doc : corpus) {
      for (const auto& sentence : split_sentences(doc)) {
        TokenSeq tokens = res.tokenizer.tokenize(sentence);
        MaskPlan plan = compute_mask_plan(tokens, config, res.stopwords);
        if (plan.empty()) continue;
        std::string key = mask_sentence(tokens, plan).key();
        for (std::size_t pos : plan.positions) {
          if (!seen.emplace(key, pos).second) continue;
          std::uint64_t slot_seed =
              fnv1a64(key.data(), key.size(), seed) ^ splitmix64_mix(pos);
          std::mt19937_64 rng(slot_seed);
          out += format_table_record(key, pos,
                                     slot_distribution(tokens[pos].piece, rng, res.vocab),
                                     res.vocab);
          out.push_back('\n');
        }
      }
    }
  }
  return out;
}

}  // namespace maskstego::testing
