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


#include "maskstego/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "maskstego/candidates.h"
#include "maskstego/corpus.h"
#include "maskstego/error.h"
#include "maskstego/hash_backend.h"
#include "maskstego/mask_planner.h"
#include "maskstego/protocol.h"
#include "maskstego/sentence_splitter.h"

namespace maskstego {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Runs fn(i) for i in [0, count) on a pool of workers. The first exception
// thrown is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

struct DocumentCapacity {
  std::optional<StegoResult> result;
  std::size_t words = 0;
};

}  // namespace

BitString document_message(std::size_t index, std::size_t bits) {
  BitString out;
  std::uint64_t state = index;
  while (out.size() < bits) {
    state += kGolden;
    std::uint64_t word = splitmix64_mix(state);
    std::size_t take = std::min<std::size_t>(64, bits - out.size());
    out.append_uint(word >> (64 - take), take);
  }
  return out;
}

CapacityReport measure_capacity(const std::vector<std::string>& corpus,
                                const StegoConfig& config,
                                const SharedResources& resources,
                                std::size_t message_bits, std::size_t threads) {
  StegoConfig fixed = config;
  fixed.framing = FixedFraming{message_bits};
  Codec codec(fixed, resources);

  std::vector<DocumentCapacity> docs(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    try {
      StegoResult r = codec.encode(corpus[i], document_message(i, message_bits));
      docs[i].words = count_words(r.stego_text);
      docs[i].result = std::move(r);
    } catch (const CapacityExhausted&) {
      docs[i].result.reset();
    }
  });

  CapacityReport report;
  for (const auto& d : docs) {
    if (!d.result) {
      ++report.documents_skipped;
      continue;
    }
    ++report.documents_processed;
    report.bits_embedded += d.result->bits_embedded;
    report.words += d.words;
    report.positions_total += d.result->positions_planned;
    report.positions_zero_capacity += d.result->positions_zero_capacity;
  }
  if (report.words > 0) {
    report.bits_per_word = static_cast<double>(report.bits_embedded) /
                           static_cast<double>(report.words);
  }
  return report;
}

DistortionReport audit_distortion(const std::vector<std::string>& corpus,
                                  const StegoConfig& config,
                                  const SharedResources& resources,
                                  std::size_t threads) {
  StegoConfig unfiltered = validate_config(config);
  unfiltered.safe_mode = false;
  const Vocabulary& vocab = resources.tokenizer.vocabulary();

  struct Counts {
    std::size_t masked = 0;
    std::size_t unsafe = 0;
  };
  std::vector<Counts> per_doc(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    std::string_view doc = corpus[i];
    for (const SentenceSpan& span : sentence_spans(doc)) {
      TokenSeq tokens = resources.tokenizer.tokenize(
          doc.substr(span.begin, span.end - span.begin));
      MaskPlan plan = compute_mask_plan(tokens, unfiltered, resources.stopwords);
      if (plan.empty()) continue;
      auto dists = resources.backend.predict(mask_sentence(tokens, plan));
      for (std::size_t k = 0; k < plan.size(); ++k) {
        std::size_t pos = plan.positions[k];
        CandidateSet set =
            candidate_set(dists.at(k), vocab, unfiltered, resources.stopwords);
        ++per_doc[i].masked;
        bool unsafe = std::any_of(
            set.entries.begin(), set.entries.end(), [&](const CandidateEntry& e) {
              return !check_retokenization_safe(resources.tokenizer, tokens,
                                                pos, e.token);
            });
        if (unsafe) ++per_doc[i].unsafe;
      }
    }
  });

  DistortionReport report;
  for (const auto& c : per_doc) {
    report.masked_positions += c.masked;
    report.positions_with_unsafe_candidate += c.unsafe;
  }
  if (report.masked_positions > 0) {
    report.rate = static_cast<double>(report.positions_with_unsafe_candidate) /
                  static_cast<double>(report.masked_positions);
  }
  return report;
}

std::vector<SweepRow> sweep(const std::vector<std::string>& corpus,
                            const StegoConfig& base,
                            const std::vector<std::size_t>& f_values,
                            const std::vector<double>& p_values,
                            const SharedResources& resources,
                            std::size_t threads) {
  std::vector<SweepRow> rows;
  for (std::size_t f : f_values) {
    for (double p : p_values) {
      SweepRow row;
      row.f = f;
      row.p = p;
      StegoConfig config = base;
      config.f = f;
      config.p = p;
      try {
        CapacityReport cap = measure_capacity(corpus, config, resources,
                                              kDefaultMessageBits, threads);
        row.bits_per_word = cap.bits_per_word;
        row.masked_positions = cap.positions_total;
        row.zero_capacity_positions = cap.positions_zero_capacity;
        if (cap.documents_skipped > 0) {
          row.errors[std::string(error_code_name(ErrorCode::kCapacityExhausted))] =
              cap.documents_skipped;
        }
        row.distortion_rate =
            audit_distortion(corpus, config, resources, threads).rate;
      } catch (const StegoError& e) {
        ++row.errors[std::string(error_code_name(e.code()))];
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.f << ',' << format_double(row.p) << ','
        << format_double(row.bits_per_word) << ',' << row.masked_positions
        << ',' << row.zero_capacity_positions << ','
        << format_double(row.distortion_rate) << ',';
    bool first = true;
    for (const auto& [name, count] : row.errors) {
      if (!first) out << ';';
      first = false;
      out << name << ':' << count;
    }
    out << '\n';
  }
}

}  // namespace maskstego
