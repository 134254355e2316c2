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


#ifndef MASKSTEGO_HARNESS_H_
#define MASKSTEGO_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "maskstego/bitstring.h"
#include "maskstego/codec.h"
#include "maskstego/config.h"

namespace maskstego {

inline constexpr std::size_t kDefaultMessageBits = 32;

// Deterministic pseudo-random message for document `index`: successive
// splitmix64 outputs seeded with `index`, most significant bits first.
BitString document_message(std::size_t index, std::size_t bits);

struct CapacityReport {
  std::size_t bits_embedded = 0;  // padding included
  std::size_t words = 0;          // whitespace words of the stego text
  std::size_t positions_total = 0;
  std::size_t positions_zero_capacity = 0;
  std::size_t documents_processed = 0;
  std::size_t documents_skipped = 0;  // raised CapacityExhausted
  double bits_per_word = 0.0;

  double zero_capacity_fraction() const {
    return positions_total == 0
               ? 0.0
               : static_cast<double>(positions_zero_capacity) /
                     static_cast<double>(positions_total);
  }
};

struct DistortionReport {
  std::size_t masked_positions = 0;
  std::size_t positions_with_unsafe_candidate = 0;
  double rate = 0.0;
};

// Encodes document_message(i, message_bits) into each document with fixed
// framing and aggregates over the documents that had room for it. Documents
// run on `threads` workers (0 = hardware concurrency); results are merged in
// document order.
CapacityReport measure_capacity(const std::vector<std::string>& corpus,
                                const StegoConfig& config,
                                const SharedResources& resources,
                                std::size_t message_bits = kDefaultMessageBits,
                                std::size_t threads = 0);

// Over every sentence of every document, counts planned positions of the
// cover text having at least one candidate above the threshold that is
// eligible but fails check_retokenization_safe. Independent of safe_mode.
DistortionReport audit_distortion(const std::vector<std::string>& corpus,
                                  const StegoConfig& config,
                                  const SharedResources& resources,
                                  std::size_t threads = 0);

struct SweepRow {
  std::size_t f = 0;
  double p = 0.0;
  double bits_per_word = 0.0;
  std::size_t masked_positions = 0;
  std::size_t zero_capacity_positions = 0;
  double distortion_rate = 0.0;
  // Error code name to count, e.g. {"capacity_exhausted", 3}.
  std::map<std::string, std::size_t> errors;
};

// One row per (f, p), f in the outer loop, p in the inner loop. Failures in
// a cell are recorded in its errors column instead of aborting the sweep.
std::vector<SweepRow> sweep(const std::vector<std::string>& corpus,
                            const StegoConfig& base,
                            const std::vector<std::size_t>& f_values,
                            const std::vector<double>& p_values,
                            const SharedResources& resources,
                            std::size_t threads = 0);

inline constexpr const char* kSweepCsvHeader =
    "f,p,bits_per_word,masked_positions,zero_capacity_positions,"
    "distortion_rate,errors";

// Header plus one line per row. The errors column lists name:count pairs
// joined by ';', or is empty.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace maskstego

#endif  // MASKSTEGO_HARNESS_H_
