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


#include <random>

#include "doctest.h"
#include "maskstego/digest.h"
#include "maskstego/eligibility.h"
#include "maskstego/error.h"
#include "maskstego/sentence_splitter.h"
#include "maskstego/stopwords.h"
#include "maskstego/token_seq.h"
#include "maskstego/tokenizer.h"
#include "maskstego/unicode.h"
#include "maskstego/vocabulary.h"
#include "test_support.h"

namespace maskstego {
namespace {

using Pieces = std::vector<std::string>;

Pieces pieces_of(std::string_view text) {
  return testing::resources().tokenizer.tokenize(text).pieces();
}

TEST_CASE("unicode decoding replaces malformed bytes") {
  auto cps = unicode::decode("a\xC3\xA9\xFF\xE2\x82");
  REQUIRE(cps.size() == 5);
  CHECK(cps[0].value == U'a');
  CHECK(cps[1].value == 0xE9);
  CHECK(cps[1].length == 2);
  CHECK(cps[2].value == 0xFFFD);
  CHECK(cps[3].value == 0xFFFD);
  CHECK(cps[4].value == 0xFFFD);
  std::string out;
  unicode::append_utf8(out, 0x1F600);
  CHECK(out == "\xF0\x9F\x98\x80");
}

TEST_CASE("unicode character classes") {
  CHECK(unicode::is_whitespace(U' '));
  CHECK(unicode::is_whitespace(0x3000));
  CHECK_FALSE(unicode::is_control(U'\t'));
  CHECK(unicode::is_control(0x01));
  CHECK(unicode::is_punctuation(U'$'));
  CHECK(unicode::is_punctuation(0x201C));
  CHECK(unicode::is_cjk(0x732B));
  CHECK(unicode::to_lower("ÉCOLE") == "école");
  CHECK(unicode::has_uppercase("Geneva"));
  CHECK_FALSE(unicode::has_alphabetic("3.14"));
}

TEST_CASE("vocabulary lookup") {
  const Vocabulary& v = testing::resources().vocab;
  CHECK(v.size() == 586);
  CHECK(v.token(0) == "[PAD]");
  CHECK(v.find("[MASK]").has_value());
  CHECK_FALSE(v.find("near").has_value());
  CHECK_THROWS_AS(v.require("[NOPE]"), StegoError);
  CHECK(is_special_token("[UNK]"));
  CHECK(is_special_token("[unused3]"));
  CHECK_FALSE(is_special_token("["));
  CHECK_FALSE(is_special_token("[]"));
  CHECK(v.digest() == sha256_hex(read_file(testing::vocab_path())));
  Vocabulary crlf = Vocabulary::parse("a\r\nb\r\n");
  CHECK(crlf.size() == 2);
  CHECK(crlf.token(1) == "b");
}

TEST_CASE("shipped stopword list") {
  const StopwordList& s = testing::resources().stopwords;
  CHECK(s.size() == 179);
  CHECK(s.contains("the"));
  CHECK(s.contains("The"));
  CHECK(s.contains("THE"));
  CHECK(s.contains("don't"));
  CHECK_FALSE(s.contains("cat"));
  CHECK(s.digest() == sha256_hex(read_file(testing::stopwords_path())));
}

TEST_CASE("stopword digest tracks content") {
  auto a = StopwordList::parse("the\nand\n");
  auto b = StopwordList::parse("the\nand\n");
  auto c = StopwordList::parse("the\nor\n");
  CHECK(a.digest() == b.digest());
  CHECK(a.digest() != c.digest());
}

TEST_CASE("wordpiece segmentation") {
  CHECK(pieces_of("unbreakable") == Pieces{"un", "##break", "##able"});
  CHECK(pieces_of("").empty());
  CHECK(pieces_of("   ").empty());
  CHECK(pieces_of("She will marry him.") ==
        Pieces{"She", "will", "marry", "him", "."});
  CHECK(pieces_of("cats, dogs!") == Pieces{"cat", "##s", ",", "dog", "##s", "!"});
  CHECK(pieces_of("walking") == Pieces{"walk", "##ing"});
}

TEST_CASE("unknown words keep their text") {
  TokenSeq t = testing::resources().tokenizer.tokenize("the Zqzq cat");
  REQUIRE(t.size() == 3);
  CHECK(t[1].piece == "[UNK]");
  CHECK(t[1].surface == "Zqzq");
  CHECK(detokenize(t) == "the Zqzq cat");

  std::string long_word(101, 'a');
  CHECK(pieces_of(long_word) == Pieces{"[UNK]"});
  CHECK(pieces_of("\xE7\x8C\xAB\xE7\x8C\xAB") == Pieces{"[UNK]", "[UNK]"});
}

TEST_CASE("control characters are dropped") {
  CHECK(pieces_of("\x01She\x7F will") == Pieces{"She", "will"});
  CHECK(pieces_of(std::string("ca\0t", 4)) == Pieces{"cat"});
}

TEST_CASE("token offsets and spacing") {
  TokenSeq t = testing::resources().tokenizer.tokenize("  the cats.");
  REQUIRE(t.size() == 4);
  CHECK(t[0].begin == 2);
  CHECK(t[0].end == 5);
  CHECK_FALSE(t[0].space_before);
  CHECK(t[1].space_before);
  CHECK(t[2].piece == "##s");
  CHECK_FALSE(t[2].space_before);
  CHECK(t[2].begin == 9);
  CHECK_FALSE(t[3].space_before);
}

TEST_CASE("detokenize") {
  CHECK(detokenize(TokenSeq::from_pieces({"un", "##break", "##able"})) == "unbreakable");
  CHECK(detokenize(TokenSeq()).empty());
  CHECK(detokenize(TokenSeq::from_pieces({"She", "will", "wed", "him"})) ==
        "She will wed him");
  CHECK(detokenize(TokenSeq::from_pieces({"(", "a", ")", "costs", "$", "5", "%", ".", "don", "'", "t"})) ==
        "(a) costs $5%. don't");
}

TEST_CASE("a merged subword re-segments differently") {
  TokenSeq t = TokenSeq::from_pieces({"un", "##break", "##able"});
  t.replace(1, "##us");
  std::string text = detokenize(t);
  CHECK(text == "unusable");
  CHECK(pieces_of(text) == Pieces{"un", "##usable"});
}

TEST_CASE("token sequences compare by pieces") {
  TokenSeq a = TokenSeq::from_pieces({"cat", "dog"});
  TokenSeq b = testing::resources().tokenizer.tokenize("cat   dog");
  CHECK(a == b);
  CHECK_FALSE(a == TokenSeq::from_pieces({"cat"}));
  CHECK(a.slice(1, 2).pieces() == Pieces{"dog"});
  CHECK(a.with_replacement(0, "##x")[0].surface == "x");
}

TEST_CASE("tokenize after detokenize is stable on tokenizer output") {
  std::mt19937_64 rng(5);
  const auto& tok = testing::resources().tokenizer;
  for (int i = 0; i < 500; ++i) {
    TokenSeq t = tok.tokenize(testing::synthetic_sentence(rng));
    CHECK(tok.tokenize(detokenize(t)) == t);
  }
}

TEST_CASE("sentence splitting") {
  using Sentences = std::vector<std::string>;
  CHECK(split_sentences("A. B? C!") == Sentences{"A.", "B?", "C!"});
  CHECK(split_sentences("no terminator") == Sentences{"no terminator"});
  CHECK(split_sentences("Mr. Smith left. He ran.") ==
        Sentences{"Mr. Smith left.", "He ran."});
  CHECK(split_sentences("The U.S. Army came. It left.") ==
        Sentences{"The U.S. Army came.", "It left."});
  CHECK(split_sentences("He said \"Stop.\" Then he left.") ==
        Sentences{"He said \"Stop.\"", "Then he left."});
  CHECK(split_sentences("It ended. then more.") ==
        Sentences{"It ended. then more."});
  CHECK(split_sentences("Wait! (Really?) Yes.") ==
        Sentences{"Wait!", "(Really?)", "Yes."});
  CHECK(split_sentences("").empty());
  CHECK(split_sentences("  \n ").empty());
}

TEST_CASE("sentence spans reproduce the input with separators") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::string text = "  ";
    for (int s = 0; s < 5; ++s) {
      text += testing::synthetic_sentence(rng);
      text += (s % 2 == 0) ? " \n" : "   ";
    }
    auto spans = sentence_spans(text);
    CHECK(spans.size() == 5);
    std::string rebuilt;
    std::size_t at = 0;
    for (const auto& span : spans) {
      std::string_view gap(text.data() + at, span.begin - at);
      for (char ch : gap) CHECK(std::isspace(static_cast<unsigned char>(ch)));
      rebuilt.append(gap);
      rebuilt.append(text, span.begin, span.end - span.begin);
      at = span.end;
    }
    rebuilt.append(text, at, std::string::npos);
    CHECK(rebuilt == text);
  }
}

TEST_CASE("abbreviation list") {
  auto list = abbreviations();
  CHECK(list.size() == 33);
  CHECK(std::find(list.begin(), list.end(), "Dr") != list.end());
  CHECK_FALSE(is_sentence_boundary("Dr.", "Who"));
  CHECK(is_sentence_boundary("dr.", "Who"));
  CHECK(is_sentence_boundary("No.", "Five"));
  CHECK_FALSE(is_sentence_boundary("e.g.", "Smith"));
  CHECK(is_sentence_boundary("end.", "\"Quote"));
  CHECK_FALSE(is_sentence_boundary("end.", "3"));
}

TEST_CASE("classification precedence") {
  const auto& sw = testing::resources().stopwords;
  StegoConfig all;
  all.skip_capitalized = true;
  CHECK(classify("##able", all, sw) == EligibilityClass::kContinuationSubword);
  CHECK(classify("the", all, sw) == EligibilityClass::kStopword);
  CHECK(classify("The", all, sw) == EligibilityClass::kStopword);
  CHECK(classify("Geneva", all, sw) == EligibilityClass::kCapitalized);
  CHECK(classify("3.5", all, sw) == EligibilityClass::kPunctOrNumber);
  CHECK(classify(",", all, sw) == EligibilityClass::kPunctOrNumber);
  CHECK(classify("##5", all, sw) == EligibilityClass::kContinuationSubword);
  CHECK(classify("marry", all, sw) == EligibilityClass::kEligible);
  CHECK(to_string(EligibilityClass::kPunctOrNumber) == "punct_or_number");
}

TEST_CASE("classify never reports a class whose flag is off") {
  const auto& sw = testing::resources().stopwords;
  const Vocabulary& v = testing::resources().vocab;
  for (int mask = 0; mask < 16; ++mask) {
    StegoConfig c;
    c.skip_subwords = mask & 1;
    c.skip_punct_num = mask & 2;
    c.skip_stopwords = mask & 4;
    c.skip_capitalized = mask & 8;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto cls = classify(v.token(static_cast<TokenId>(i)), c, sw);
      if (cls == EligibilityClass::kContinuationSubword) CHECK(c.skip_subwords);
      if (cls == EligibilityClass::kPunctOrNumber) CHECK(c.skip_punct_num);
      if (cls == EligibilityClass::kStopword) CHECK(c.skip_stopwords);
      if (cls == EligibilityClass::kCapitalized) CHECK(c.skip_capitalized);
    }
  }
}

}  // namespace
}  // namespace maskstego
