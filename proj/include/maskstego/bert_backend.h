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


#ifndef MASKSTEGO_BERT_BACKEND_H_
#define MASKSTEGO_BERT_BACKEND_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "maskstego/backend.h"
#include "maskstego/vocabulary.h"

namespace maskstego {

struct BertConfig {
  std::size_t vocab_size = 0;
  std::size_t hidden_size = 0;
  std::size_t num_layers = 0;
  std::size_t num_heads = 0;
  std::size_t intermediate_size = 0;
  std::size_t max_positions = 0;
  double layer_norm_eps = 1e-12;
  std::string hidden_act = "gelu";  // gelu, gelu_new or relu
};

// Parses the subset of a Hugging Face config.json the forward pass needs.
BertConfig parse_bert_config(const std::string& json_text);

// File names inside a model directory.
inline constexpr const char* kModelWeightsFile = "model.safetensors";
inline constexpr const char* kModelConfigFile = "config.json";
inline constexpr const char* kModelVocabFile = "vocab.txt";

// CPU forward pass of a BERT masked-LM exported as a model directory:
//
//   model.safetensors  BertForMaskedLM weights under their usual names
//   config.json        architecture hyperparameters
//   vocab.txt          WordPiece vocabulary, one token per line
//
// The model sees [CLS] pieces [SEP] with token type 0 and returns a softmax
// over the vocabulary at each masked position. The output projection reuses
// the word embeddings unless a separate decoder matrix is stored.
class BertBackend final : public LanguageModelBackend {
 public:
  // Throws StegoError(kIo), (kParse) or (kBackend) when files are missing,
  // malformed, or disagree on the vocabulary size.
  static std::unique_ptr<BertBackend> load(const std::filesystem::path& dir);

  ~BertBackend() override;

  std::vector<Distribution> predict(const MaskedSentence& input) const override;
  std::size_t vocab_size() const override;
  // "model:<sha256 of model.safetensors>"
  std::string identity() const override;

  const Vocabulary& vocabulary() const;
  const BertConfig& config() const;

 private:
  struct Impl;
  explicit BertBackend(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace maskstego

#endif  // MASKSTEGO_BERT_BACKEND_H_
