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


#include "maskstego/cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "maskstego/bert_backend.h"
#include "maskstego/bitstring.h"
#include "maskstego/codec.h"
#include "maskstego/corpus.h"
#include "maskstego/digest.h"
#include "maskstego/error.h"
#include "maskstego/harness.h"
#include "maskstego/hash_backend.h"
#include "maskstego/protocol.h"
#include "maskstego/stopwords.h"
#include "maskstego/table_backend.h"
#include "maskstego/tokenizer.h"

namespace maskstego {

namespace {

struct Options {
  std::size_t f = 3;
  double p = 0.02;
  bool skip_punct_num = true;
  bool skip_stopwords = true;
  bool skip_subwords = true;
  bool skip_capitalized = false;
  bool safe_mode = true;
  bool header_framing = false;
  std::string message_hex;
  std::size_t message_bits = 0;
  std::string backend;
  std::string stopwords = MASKSTEGO_DEFAULT_STOPWORDS;
  std::string vocab;
  std::string cover;
  std::string stego;
  std::string out;
  std::string protocol_out;
  std::string protocol;
  std::string corpus;
  std::vector<std::size_t> f_values = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> p_values = {0.01, 0.02, 0.05, 0.1};
  std::size_t threads = 0;
};

[[noreturn]] void usage_error(const std::string& message) {
  throw StegoError(ErrorCode::kInvalidConfig, message);
}

void add_config_options(CLI::App* app, Options& o) {
  app->add_option("--f", o.f, "Masking interval")->capture_default_str();
  app->add_option("--p", o.p, "Probability threshold")->capture_default_str();
  app->add_flag("--skip-punct-num,!--no-skip-punct-num", o.skip_punct_num,
                "Skip punctuation and numbers");
  app->add_flag("--skip-stopwords,!--no-skip-stopwords", o.skip_stopwords,
                "Skip stopwords");
  app->add_flag("--skip-subwords,!--no-skip-subwords", o.skip_subwords,
                "Skip continuation subwords");
  app->add_flag("--skip-capitalized,!--no-skip-capitalized", o.skip_capitalized,
                "Skip tokens containing uppercase letters");
  app->add_flag("--safe-mode,!--fast-mode", o.safe_mode,
                "Drop candidates that could desynchronize decoding");
  app->add_option("--backend", o.backend,
                  "table:<path>, hash:<seed> or model:<dir>")
      ->required();
  app->add_option("--stopwords", o.stopwords, "Stopword list")
      ->capture_default_str();
  app->add_option("--vocab", o.vocab,
                  "WordPiece vocabulary (defaults to the model's for model:)");
}

void add_message_options(CLI::App* app, Options& o) {
  app->add_flag("--header-framing", o.header_framing,
                "Prefix the message with a 32-bit length header");
  app->add_option("--message-bits", o.message_bits,
                  "Message length in bits");
}

StegoConfig make_config(const Options& o) {
  StegoConfig c;
  c.f = o.f;
  c.p = o.p;
  c.skip_punct_num = o.skip_punct_num;
  c.skip_stopwords = o.skip_stopwords;
  c.skip_subwords = o.skip_subwords;
  c.skip_capitalized = o.skip_capitalized;
  c.safe_mode = o.safe_mode;
  if (o.header_framing) {
    c.framing = HeaderFraming{};
  } else {
    c.framing = FixedFraming{o.message_bits};
  }
  return validate_config(c);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw StegoError(ErrorCode::kIo, "cannot write " + path);
}

// Loaded resources for one invocation. Members are heap-allocated because
// the tokenizer keeps a reference to the vocabulary.
struct Session {
  std::unique_ptr<Vocabulary> vocab;
  std::unique_ptr<WordPieceTokenizer> tokenizer;
  std::unique_ptr<StopwordList> stopwords;
  std::unique_ptr<LanguageModelBackend> backend;

  explicit Session(const Options& o) {
    std::string vocab_path = o.vocab;
    if (vocab_path.empty() && o.backend.starts_with("model:")) {
      vocab_path = (std::filesystem::path(o.backend.substr(6)) /
                    kModelVocabFile)
                       .string();
    }
    if (vocab_path.empty()) usage_error("--vocab is required for this backend");
    vocab = std::make_unique<Vocabulary>(Vocabulary::load(vocab_path));
    tokenizer = std::make_unique<WordPieceTokenizer>(*vocab);
    stopwords = std::make_unique<StopwordList>(StopwordList::load(o.stopwords));
    backend = make_backend(o.backend, *vocab);
  }

  SharedResources resources() const { return {*tokenizer, *stopwords, *backend}; }

  ProtocolDescriptor descriptor(const StegoConfig& config) const {
    return ProtocolDescriptor::describe(config, backend->identity(),
                                        vocab->digest(), stopwords->digest());
  }
};

BitString message_from(const Options& o) {
  if (o.message_hex.empty()) usage_error("--message-hex is required");
  std::size_t bits = o.message_bits;
  if (bits == 0) bits = 4 * o.message_hex.size();
  return BitString::from_hex(o.message_hex, bits);
}

int run_encode(Options o, std::ostream& out, std::ostream& err) {
  BitString message = message_from(o);
  o.message_bits = message.size();
  StegoConfig config = make_config(o);
  Session session(o);
  Codec codec(config, session.resources());
  StegoResult result = codec.encode(read_input(o.cover), message);
  write_output(o.out, result.stego_text, out);
  if (!o.protocol_out.empty()) {
    write_output(o.protocol_out, session.descriptor(config).to_text(), out);
  }
  err << "bits_embedded=" << result.bits_embedded
      << " padding_bits=" << result.padding_bits
      << " sentences_used=" << result.sentences_used
      << " positions_edited=" << result.positions_edited << '\n';
  return kExitOk;
}

int run_decode(const Options& o, std::ostream& out) {
  if (!o.header_framing && o.message_bits == 0) {
    usage_error("decode needs --message-bits or --header-framing");
  }
  StegoConfig config = make_config(o);
  Session session(o);
  if (!o.protocol.empty()) {
    require_compatible(ProtocolDescriptor::parse(read_file(o.protocol)),
                       session.descriptor(config));
  }
  Codec codec(config, session.resources());
  BitString bits = codec.decode(read_input(o.stego));
  write_output(o.out, format_message(bits) + "\n", out);
  return kExitOk;
}

int run_capacity(Options o, std::ostream& out) {
  o.message_bits = o.message_bits == 0 ? kDefaultMessageBits : o.message_bits;
  StegoConfig config = make_config(o);
  Session session(o);
  CapacityReport r = measure_capacity(load_corpus(o.corpus), config,
                                      session.resources(), o.message_bits,
                                      o.threads);
  std::ostringstream s;
  s << "bits_per_word=" << format_double(r.bits_per_word) << '\n'
    << "bits_embedded=" << r.bits_embedded << '\n'
    << "words=" << r.words << '\n'
    << "positions_total=" << r.positions_total << '\n'
    << "positions_zero_capacity=" << r.positions_zero_capacity << '\n'
    << "documents_processed=" << r.documents_processed << '\n'
    << "documents_skipped=" << r.documents_skipped << '\n';
  write_output(o.out, s.str(), out);
  return kExitOk;
}

int run_audit(Options o, std::ostream& out) {
  o.message_bits = kDefaultMessageBits;
  StegoConfig config = make_config(o);
  Session session(o);
  DistortionReport r = audit_distortion(load_corpus(o.corpus), config,
                                        session.resources(), o.threads);
  std::ostringstream s;
  s << "masked_positions=" << r.masked_positions << '\n'
    << "positions_with_unsafe_candidate=" << r.positions_with_unsafe_candidate
    << '\n'
    << "rate=" << format_double(r.rate) << '\n';
  write_output(o.out, s.str(), out);
  return kExitOk;
}

int run_sweep(Options o, std::ostream& out) {
  o.message_bits = kDefaultMessageBits;
  StegoConfig config = make_config(o);
  for (std::size_t f : o.f_values) {
    if (f == 0) usage_error("--f-values entries must be positive");
  }
  for (double p : o.p_values) {
    if (!(p > 0.0 && p < 1.0)) usage_error("--p-values entries must lie in (0, 1)");
  }
  Session session(o);
  auto rows = sweep(load_corpus(o.corpus), config, o.f_values, o.p_values,
                    session.resources(), o.threads);
  std::ostringstream s;
  write_sweep_csv(s, rows);
  write_output(o.out, s.str(), out);
  return kExitOk;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(ch);
  }
  return out;
}

void print_error(std::ostream& err, std::string_view code,
                 std::string_view message) {
  err << "error code=" << code << " message=\"" << escape(message) << "\"\n";
}

}  // namespace

std::unique_ptr<LanguageModelBackend> make_backend(const std::string& spec,
                                                   const Vocabulary& vocab) {
  auto colon = spec.find(':');
  std::string scheme = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (scheme == "hash" && !arg.empty()) {
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), seed);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      usage_error("bad hash seed '" + arg + "'");
    }
    return std::make_unique<HashBackend>(seed, vocab.size());
  }
  if (scheme == "table" && !arg.empty()) {
    return std::make_unique<TableBackend>(TableBackend::load(arg, vocab));
  }
  if (scheme == "model" && !arg.empty()) return BertBackend::load(arg);
  usage_error("unknown backend '" + spec +
              "'; expected table:<path>, hash:<seed> or model:<dir>");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app("Hide bits in text by masked-LM token substitution",
               args.empty() ? "maskstego" : args[0]);
  app.require_subcommand(1);

  auto* encode = app.add_subcommand("encode", "Embed a message in a cover text");
  add_config_options(encode, o);
  add_message_options(encode, o);
  encode->add_option("--message-hex", o.message_hex, "Message as hex digits")
      ->required();
  encode->add_option("--cover", o.cover, "Cover text file, - for stdin")->required();
  encode->add_option("--out", o.out, "Stego text output (default stdout)");
  encode->add_option("--protocol-out", o.protocol_out,
                     "Write the protocol descriptor here");

  auto* decode = app.add_subcommand("decode", "Recover a message");
  add_config_options(decode, o);
  add_message_options(decode, o);
  decode->add_option("--stego", o.stego, "Stego text file, - for stdin")->required();
  decode->add_option("--protocol", o.protocol,
                     "Sender's protocol descriptor to check against");
  decode->add_option("--out", o.out, "Output (default stdout)");

  auto* capacity = app.add_subcommand("capacity", "Measure bits per word");
  add_config_options(capacity, o);
  capacity->add_option("--message-bits", o.message_bits,
                       "Random message length per document (default 32)");
  auto* audit = app.add_subcommand("audit", "Measure retokenization risk");
  add_config_options(audit, o);
  auto* sweep_cmd = app.add_subcommand("sweep", "Capacity and risk over f and p");
  add_config_options(sweep_cmd, o);
  sweep_cmd->add_option("--f-values", o.f_values, "Comma-separated f values")
      ->delimiter(',');
  sweep_cmd->add_option("--p-values", o.p_values, "Comma-separated p values")
      ->delimiter(',');
  for (auto* sub : {capacity, audit, sweep_cmd}) {
    sub->add_option("--corpus", o.corpus, "Corpus, documents split by blank lines")
        ->required();
    sub->add_option("--out", o.out, "Output (default stdout)");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("maskstego");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (encode->parsed()) return run_encode(o, out, err);
    if (decode->parsed()) return run_decode(o, out);
    if (capacity->parsed()) return run_capacity(o, out);
    if (audit->parsed()) return run_audit(o, out);
    return run_sweep(o, out);
  } catch (const StegoError& e) {
    print_error(err, error_code_name(e.code()), e.what());
    if (e.code() == ErrorCode::kProtocolMismatch) return kExitProtocolMismatch;
    if (e.code() == ErrorCode::kInvalidConfig) return kExitUsage;
    return kExitFailure;
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return kExitFailure;
  }
}

}  // namespace maskstego
