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


#include "maskstego/bert_backend.h"

#include <Eigen/Dense>
#include <cmath>

#include "json.hpp"
#include "maskstego/digest.h"
#include "maskstego/error.h"
#include "maskstego/safetensors.h"

namespace maskstego {

namespace {

using Matrix =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<float, 1, Eigen::Dynamic>;

[[noreturn]] void backend_error(const std::string& what) {
  throw StegoError(ErrorCode::kBackend, "model: " + what);
}

struct Linear {
  Matrix weight;  // [out, in]
  Vector bias;

  Matrix operator()(const Matrix& x) const {
    Matrix y = x * weight.transpose();
    y.rowwise() += bias;
    return y;
  }
};

struct LayerNorm {
  Vector gamma;
  Vector beta;
  float eps = 1e-12f;

  void apply(Matrix& x) const {
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      auto row = x.row(r);
      float mean = row.mean();
      Vector centered = row.array() - mean;
      float var = centered.squaredNorm() / static_cast<float>(row.size());
      row = (centered.array() / std::sqrt(var + eps)) * gamma.array() +
            beta.array();
    }
  }
};

struct Layer {
  Linear query, key, value, attn_out;
  LayerNorm attn_norm;
  Linear intermediate, output;
  LayerNorm out_norm;
};

Matrix to_matrix(const Tensor& t, std::size_t rows, std::size_t cols,
                 const std::string& name) {
  if (t.shape.size() != 2 || static_cast<std::size_t>(t.shape[0]) != rows ||
      static_cast<std::size_t>(t.shape[1]) != cols) {
    backend_error("unexpected shape for " + name);
  }
  return Eigen::Map<const Matrix>(t.values.data(), static_cast<Eigen::Index>(rows),
                                  static_cast<Eigen::Index>(cols));
}

Vector to_vector(const Tensor& t, std::size_t size, const std::string& name) {
  if (t.shape.size() != 1 || static_cast<std::size_t>(t.shape[0]) != size) {
    backend_error("unexpected shape for " + name);
  }
  return Eigen::Map<const Vector>(t.values.data(), static_cast<Eigen::Index>(size));
}

float activate(float x, const std::string& act) {
  if (act == "relu") return x > 0.0f ? x : 0.0f;
  if (act == "gelu_new") {
    constexpr float kC = 0.7978845608028654f;  // sqrt(2 / pi)
    return 0.5f * x * (1.0f + std::tanh(kC * (x + 0.044715f * x * x * x)));
  }
  return 0.5f * x * (1.0f + std::erf(x * 0.7071067811865476f));
}

}  // namespace

struct BertBackend::Impl {
  BertConfig config;
  Vocabulary vocab;
  std::string weights_digest;

  Matrix word_embeddings;
  Matrix position_embeddings;
  Vector token_type0;
  LayerNorm embed_norm;
  std::vector<Layer> layers;
  Linear transform;
  LayerNorm transform_norm;
  Matrix decoder;  // [vocab, hidden]
  Vector decoder_bias;

  Matrix forward(const std::vector<TokenId>& ids) const;
};

BertConfig parse_bert_config(const std::string& json_text) {
  BertConfig c;
  try {
    auto j = nlohmann::json::parse(json_text);
    c.vocab_size = j.at("vocab_size").get<std::size_t>();
    c.hidden_size = j.at("hidden_size").get<std::size_t>();
    c.num_layers = j.at("num_hidden_layers").get<std::size_t>();
    c.num_heads = j.at("num_attention_heads").get<std::size_t>();
    c.intermediate_size = j.at("intermediate_size").get<std::size_t>();
    c.max_positions = j.at("max_position_embeddings").get<std::size_t>();
    c.layer_norm_eps = j.value("layer_norm_eps", 1e-12);
    c.hidden_act = j.value("hidden_act", std::string("gelu"));
  } catch (const nlohmann::json::exception& e) {
    throw StegoError(ErrorCode::kParse, std::string("config.json: ") + e.what());
  }
  if (c.num_heads == 0 || c.hidden_size % c.num_heads != 0) {
    throw StegoError(ErrorCode::kParse,
                     "config.json: hidden_size not divisible by heads");
  }
  if (c.hidden_act != "gelu" && c.hidden_act != "gelu_new" &&
      c.hidden_act != "relu") {
    throw StegoError(ErrorCode::kParse,
                     "config.json: unsupported activation " + c.hidden_act);
  }
  return c;
}

std::unique_ptr<BertBackend> BertBackend::load(const std::filesystem::path& dir) {
  auto impl = std::make_unique<Impl>();
  impl->config = parse_bert_config(read_file(dir / kModelConfigFile));
  impl->vocab = Vocabulary::load(dir / kModelVocabFile);
  std::string weights_bytes = read_file(dir / kModelWeightsFile);
  impl->weights_digest = sha256_hex(weights_bytes);
  SafetensorsFile st = SafetensorsFile::parse(weights_bytes);
  weights_bytes.clear();
  weights_bytes.shrink_to_fit();

  const BertConfig& c = impl->config;
  if (impl->vocab.size() != c.vocab_size) {
    backend_error("vocab.txt has " + std::to_string(impl->vocab.size()) +
                  " entries, model expects " + std::to_string(c.vocab_size));
  }
  const std::size_t h = c.hidden_size;
  const float eps = static_cast<float>(c.layer_norm_eps);

  auto mat = [&](const std::string& name, std::size_t r, std::size_t cols) {
    return to_matrix(st.tensor(name), r, cols, name);
  };
  auto vec = [&](const std::string& name, std::size_t n) {
    return to_vector(st.tensor(name), n, name);
  };
  auto linear = [&](const std::string& prefix, std::size_t out, std::size_t in) {
    return Linear{mat(prefix + ".weight", out, in), vec(prefix + ".bias", out)};
  };
  auto norm = [&](const std::string& prefix) {
    return LayerNorm{vec(prefix + ".weight", h), vec(prefix + ".bias", h), eps};
  };

  const std::string e = "bert.embeddings.";
  impl->word_embeddings = mat(e + "word_embeddings.weight", c.vocab_size, h);
  impl->position_embeddings = mat(e + "position_embeddings.weight", c.max_positions, h);
  const Tensor& types = st.tensor(e + "token_type_embeddings.weight");
  if (types.shape.size() != 2 || static_cast<std::size_t>(types.shape[1]) != h ||
      types.shape[0] < 1) {
    backend_error("unexpected shape for token_type_embeddings");
  }
  impl->token_type0 = Eigen::Map<const Vector>(types.values.data(),
                                               static_cast<Eigen::Index>(h));
  impl->embed_norm = norm(e + "LayerNorm");

  for (std::size_t i = 0; i < c.num_layers; ++i) {
    const std::string p = "bert.encoder.layer." + std::to_string(i) + ".";
    Layer layer;
    layer.query = linear(p + "attention.self.query", h, h);
    layer.key = linear(p + "attention.self.key", h, h);
    layer.value = linear(p + "attention.self.value", h, h);
    layer.attn_out = linear(p + "attention.output.dense", h, h);
    layer.attn_norm = norm(p + "attention.output.LayerNorm");
    layer.intermediate = linear(p + "intermediate.dense", c.intermediate_size, h);
    layer.output = linear(p + "output.dense", h, c.intermediate_size);
    layer.out_norm = norm(p + "output.LayerNorm");
    impl->layers.push_back(std::move(layer));
  }

  impl->transform = linear("cls.predictions.transform.dense", h, h);
  impl->transform_norm = norm("cls.predictions.transform.LayerNorm");
  if (st.contains("cls.predictions.decoder.weight")) {
    impl->decoder = mat("cls.predictions.decoder.weight", c.vocab_size, h);
  } else {
    impl->decoder = impl->word_embeddings;
  }
  impl->decoder_bias = vec("cls.predictions.bias", c.vocab_size);
  return std::unique_ptr<BertBackend>(new BertBackend(std::move(impl)));
}

BertBackend::BertBackend(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
BertBackend::~BertBackend() = default;

std::size_t BertBackend::vocab_size() const { return impl_->config.vocab_size; }

std::string BertBackend::identity() const {
  return "model:" + impl_->weights_digest;
}

const Vocabulary& BertBackend::vocabulary() const { return impl_->vocab; }
const BertConfig& BertBackend::config() const { return impl_->config; }

Matrix BertBackend::Impl::forward(const std::vector<TokenId>& ids) const {
  const auto len = static_cast<Eigen::Index>(ids.size());
  const auto h = static_cast<Eigen::Index>(config.hidden_size);
  const auto heads = static_cast<Eigen::Index>(config.num_heads);
  const Eigen::Index d = h / heads;
  const float scale = 1.0f / std::sqrt(static_cast<float>(d));

  Matrix x(len, h);
  for (Eigen::Index t = 0; t < len; ++t) {
    x.row(t) = word_embeddings.row(ids[static_cast<std::size_t>(t)]) +
               position_embeddings.row(t) + token_type0;
  }
  embed_norm.apply(x);

  for (const Layer& layer : layers) {
    Matrix q = layer.query(x);
    Matrix k = layer.key(x);
    Matrix v = layer.value(x);
    Matrix context(len, h);
    for (Eigen::Index head = 0; head < heads; ++head) {
      Matrix scores = q.middleCols(head * d, d) *
                      k.middleCols(head * d, d).transpose() * scale;
      for (Eigen::Index r = 0; r < len; ++r) {
        auto row = scores.row(r);
        row.array() -= row.maxCoeff();
        row = row.array().exp();
        row /= row.sum();
      }
      context.middleCols(head * d, d) = scores * v.middleCols(head * d, d);
    }
    Matrix attn = layer.attn_out(context) + x;
    layer.attn_norm.apply(attn);
    Matrix inner = layer.intermediate(attn);
    inner = inner.unaryExpr(
        [&](float value) { return activate(value, config.hidden_act); });
    x = layer.output(inner) + attn;
    layer.out_norm.apply(x);
  }
  return x;
}

std::vector<Distribution> BertBackend::predict(
    const MaskedSentence& input) const {
  const Impl& m = *impl_;
  std::vector<TokenId> ids;
  ids.reserve(input.pieces.size() + 2);
  ids.push_back(m.vocab.require(kClsToken));
  for (const auto& piece : input.pieces) {
    auto id = m.vocab.find(piece);
    ids.push_back(id ? *id : m.vocab.require(kUnknownToken));
  }
  ids.push_back(m.vocab.require(kSepToken));
  if (ids.size() > m.config.max_positions) {
    backend_error("sentence of " + std::to_string(ids.size()) +
                  " tokens exceeds the model limit of " +
                  std::to_string(m.config.max_positions));
  }

  Matrix hidden = m.forward(ids);
  std::vector<Distribution> out;
  out.reserve(input.positions.size());
  for (std::size_t pos : input.positions) {
    if (pos >= input.pieces.size()) backend_error("mask position out of range");
    Matrix row = m.transform(hidden.row(static_cast<Eigen::Index>(pos + 1)));
    row = row.unaryExpr(
        [&](float value) { return activate(value, m.config.hidden_act); });
    m.transform_norm.apply(row);
    Vector logits = row * m.decoder.transpose();
    logits += m.decoder_bias;

    double max_logit = logits.maxCoeff();
    std::vector<double> probs(static_cast<std::size_t>(logits.size()));
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      probs[i] = std::exp(static_cast<double>(logits(static_cast<Eigen::Index>(i))) - max_logit);
      total += probs[i];
    }
    for (double& p : probs) p /= total;
    out.emplace_back(std::move(probs));
  }
  return out;
}

}  // namespace maskstego
