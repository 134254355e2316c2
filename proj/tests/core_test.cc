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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "maskstego/bitstring.h"
#include "maskstego/config.h"
#include "maskstego/digest.h"
#include "maskstego/error.h"
#include "maskstego/protocol.h"
#include "maskstego/types.h"
#include "test_support.h"

namespace maskstego {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const StegoError& e) {
    return e.code();
  }
  FAIL("expected StegoError");
  return ErrorCode::kIo;
}

TEST_CASE("validate_config accepts the measured defaults") {
  StegoConfig c;
  c.f = 3;
  c.p = 0.02;
  c.skip_capitalized = true;
  CHECK(validate_config(c) == c);
}

TEST_CASE("validate_config rejects out-of-range values") {
  StegoConfig c;
  c.f = 0;
  CHECK(code_of([&] { validate_config(c); }) == ErrorCode::kInvalidConfig);
  c.f = 3;
  for (double p : {1.5, 0.0, 1.0, -0.1}) {
    c.p = p;
    CHECK(code_of([&] { validate_config(c); }) == ErrorCode::kInvalidConfig);
  }
  c.p = 0.02;
  c.framing = HeaderFraming{16};
  CHECK(code_of([&] { validate_config(c); }) == ErrorCode::kInvalidConfig);
  c.framing = FixedFraming{0};
  CHECK(code_of([&] { validate_config(c); }) == ErrorCode::kInvalidConfig);
  c.framing = HeaderFraming{};
  CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("framing names") {
  CHECK(framing_name(FixedFraming{45}) == "fixed:45");
  CHECK(framing_name(HeaderFraming{}) == "header:32");
}

TEST_CASE("error code names are stable") {
  CHECK(error_code_name(ErrorCode::kDecodeMismatch) == "decode_mismatch");
  CHECK(error_code_name(ErrorCode::kProtocolMismatch) == "protocol_mismatch");
  CapacityExhausted e(7, 32);
  CHECK(e.code() == ErrorCode::kCapacityExhausted);
  CHECK(e.bits_embedded() == 7);
  CHECK(e.bits_required() == 32);
}

TEST_CASE("BitString construction and access") {
  BitString b = BitString::from_binary("10110");
  CHECK(b.size() == 5);
  CHECK(b[0]);
  CHECK_FALSE(b[1]);
  CHECK(b.read_uint(0, 3) == 0b101);
  CHECK(b.read_uint(2, 3) == 0b110);
  CHECK(BitString::from_uint(5, 4).to_binary() == "0101");
  CHECK(BitString::from_hex("DEADBEEF", 32).to_hex() == "DEADBEEF");
  CHECK(BitString::from_hex("F8", 5).to_binary() == "11111");
  CHECK(BitString::from_hex("f8", 5) == BitString::from_binary("11111"));
  CHECK(code_of([] { BitString::from_hex("F9", 5); }) == ErrorCode::kParse);
  CHECK(code_of([] { BitString::from_hex("F", 5); }) == ErrorCode::kParse);
  CHECK(code_of([] { BitString::from_hex("FFF", 5); }) == ErrorCode::kParse);
  CHECK(code_of([] { BitString::from_hex("G0", 5); }) == ErrorCode::kParse);
  CHECK(code_of([] { BitString::from_binary("012"); }) == ErrorCode::kParse);
}

TEST_CASE("BitString pad then truncate is identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    BitString b;
    std::size_t len = testing::pick(rng, 100);
    for (std::size_t i = 0; i < len; ++i) b.push_back(rng() & 1);
    for (std::size_t boundary : {1, 3, 8, 32}) {
      BitString padded = b.padded_to(boundary);
      CHECK(padded.size() % boundary == 0);
      CHECK(padded.size() - b.size() < boundary);
      for (std::size_t i = b.size(); i < padded.size(); ++i) CHECK_FALSE(padded[i]);
      CHECK(padded.prefix(b.size()) == b);
    }
  }
}

TEST_CASE("message interchange form") {
  BitString b = BitString::from_binary("101101001");
  CHECK(format_message(b) == "len=9 hex=B48");
  CHECK(parse_message("len=9 hex=B48") == b);
  CHECK(parse_message(format_message(BitString())) == BitString());
  CHECK(code_of([] { parse_message("hex=B48"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_message("len=9 hex=B4C"); }) == ErrorCode::kParse);
}

TEST_CASE("chunk_size follows the largest power of two not above c") {
  CHECK(chunk_size(0) == 0);
  CHECK(chunk_size(1) == 0);
  CHECK(chunk_size(2) == 1);
  CHECK(chunk_size(3) == 1);
  CHECK(chunk_size(5) == 2);
  CHECK(chunk_size(8) == 3);
  CHECK(chunk_size(1024) == 10);
  for (std::size_t c = 0; c <= 1024; ++c) {
    int oracle = 0;
    while ((std::size_t{2} << oracle) <= c) ++oracle;
    CHECK(chunk_size(c) == oracle);
  }
}

TEST_CASE("candidate order is a total order") {
  std::vector<CandidateEntry> entries = {
      {4, "d", 0.1}, {2, "b", 0.3}, {9, "x", 0.3}, {1, "a", 0.5}, {3, "c", 0.1}};
  std::sort(entries.begin(), entries.end(), candidate_precedes);
  std::vector<TokenId> ids;
  for (const auto& e : entries) ids.push_back(e.id);
  CHECK(ids == std::vector<TokenId>{1, 2, 9, 3, 4});
  auto again = entries;
  std::sort(again.begin(), again.end(), candidate_precedes);
  CHECK(again == entries);
  for (const auto& a : entries) {
    CHECK_FALSE(candidate_precedes(a, a));
  }
}

TEST_CASE("CandidateSet ranks only the usable prefix") {
  CandidateSet set;
  set.entries = {{1, "a", 0.4}, {2, "b", 0.3}, {3, "c", 0.2}};
  CHECK(set.c() == 3);
  CHECK(set.n() == 1);
  CHECK(set.rank_of("a") == 0);
  CHECK(set.rank_of("b") == 1);
  CHECK(set.rank_of("c") == -1);
  set.entries.resize(1);
  CHECK(set.rank_of("a") == -1);
}

TEST_CASE("MaskPlan membership") {
  MaskPlan plan{{1, 4, 9}};
  CHECK(plan.contains(4));
  CHECK_FALSE(plan.contains(5));
}

TEST_CASE("sha256 of known inputs") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(code_of([] { read_file("/nonexistent/file"); }) == ErrorCode::kIo);
}

TEST_CASE("protocol descriptor round trip and mismatch") {
  StegoConfig c;
  c.p = 0.1;
  auto d = ProtocolDescriptor::describe(c, "hash:1", "vd", "sd");
  CHECK(d.get("p") == "0.1");
  CHECK(d.get("framing") == "fixed:32");
  CHECK(d.get("abbreviations") == "abbrev-v1");
  auto parsed = ProtocolDescriptor::parse(d.to_text());
  CHECK(parsed.fields() == d.fields());
  CHECK_NOTHROW(require_compatible(d, parsed));

  auto other = ProtocolDescriptor::describe(c, "hash:1", "vd", "other");
  CHECK(d.differences(other) == std::vector<std::string>{"stopwords_digest"});
  CHECK(code_of([&] { require_compatible(d, other); }) ==
        ErrorCode::kProtocolMismatch);
  CHECK(code_of([] { ProtocolDescriptor::parse("novalue\n"); }) ==
        ErrorCode::kParse);
  CHECK(format_double(0.02) == "0.02");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

}  // namespace
}  // namespace maskstego
