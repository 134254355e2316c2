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

#include "maskstego/bitstring.h"

#include <charconv>
#include <stdexcept>

#include "maskstego/error.h"

namespace maskstego {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString BitString::from_binary(std::string_view binary) {
  BitString out;
  out.bits_.reserve(binary.size());
  for (char c : binary) {
    if (c != '0' && c != '1') {
      throw StegoError(ErrorCode::kParse,
                       "binary string contains '" + std::string(1, c) + "'");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_length) {
  if (hex.size() * 4 < bit_length) {
    throw StegoError(ErrorCode::kParse,
                     "hex string too short for " + std::to_string(bit_length) +
                         " bits");
  }
  if (hex.size() > (bit_length + 3) / 4) {
    throw StegoError(ErrorCode::kParse, "hex string longer than len requires");
  }
  BitString out;
  out.bits_.reserve(bit_length);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    int value = hex_value(hex[i]);
    if (value < 0) {
      throw StegoError(ErrorCode::kParse,
                       "invalid hex digit '" + std::string(1, hex[i]) + "'");
    }
    for (int b = 3; b >= 0; --b) {
      bool bit = (value >> b) & 1;
      if (out.size() < bit_length) {
        out.push_back(bit);
      } else if (bit) {
        throw StegoError(ErrorCode::kParse,
                         "nonzero hex bits beyond declared length");
      }
    }
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  BitString out;
  out.append_uint(value, width);
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitString::append_uint(std::uint64_t value, std::size_t width) {
  if (width > 64) throw std::invalid_argument("append_uint: width > 64");
  for (std::size_t i = width; i-- > 0;) push_back((value >> i) & 1);
}

std::uint64_t BitString::read_uint(std::size_t offset,
                                   std::size_t width) const {
  if (width > 64 || offset + width > size()) {
    throw std::out_of_range("BitString::read_uint");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    value = (value << 1) | bits_[offset + i];
  }
  return value;
}

BitString BitString::prefix(std::size_t length) const {
  return slice(0, length);
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > size()) throw std::out_of_range("BitString::slice");
  BitString out;
  out.bits_.assign(bits_.begin() + offset, bits_.begin() + offset + length);
  return out;
}

BitString BitString::padded_to(std::size_t boundary) const {
  BitString out = *this;
  if (boundary == 0) return out;
  while (out.size() % boundary != 0) out.push_back(false);
  return out;
}

std::string BitString::to_binary() const {
  std::string out;
  out.reserve(size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  BitString padded = padded_to(4);
  std::string out;
  out.reserve(padded.size() / 4);
  for (std::size_t i = 0; i < padded.size(); i += 4) {
    out.push_back(kDigits[padded.read_uint(i, 4)]);
  }
  return out;
}

std::string format_message(const BitString& bits) {
  return "len=" + std::to_string(bits.size()) + " hex=" + bits.to_hex();
}

BitString parse_message(std::string_view text) {
  constexpr std::string_view kLen = "len=";
  constexpr std::string_view kHex = " hex=";
  auto hex_at = text.find(kHex);
  if (!text.starts_with(kLen) || hex_at == std::string_view::npos) {
    throw StegoError(ErrorCode::kParse,
                     "message must look like 'len=<bits> hex=<digits>'");
  }
  std::string_view len_text = text.substr(kLen.size(), hex_at - kLen.size());
  std::size_t length = 0;
  auto [ptr, ec] = std::from_chars(len_text.data(),
                                   len_text.data() + len_text.size(), length);
  if (ec != std::errc() || ptr != len_text.data() + len_text.size()) {
    throw StegoError(ErrorCode::kParse, "bad len field in message");
  }
  std::string_view hex = text.substr(hex_at + kHex.size());
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r' ||
                          hex.back() == ' ')) {
    hex.remove_suffix(1);
  }
  return BitString::from_hex(hex, length);
}

}  // namespace maskstego
