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

#ifndef MASKSTEGO_BITSTRING_H_
#define MASKSTEGO_BITSTRING_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

// An ordered bit sequence with an explicit length. Bit 0 is the first bit
// transmitted; multi-bit values are read and written most-significant first.
class BitString {
 public:
  BitString() = default;

  // Parses a string of '0' and '1' characters.
  static BitString from_binary(std::string_view binary);

  // Takes the first `bit_length` bits of the hex digits, most significant
  // bit of the first digit first. Bits beyond `bit_length` must be zero.
  static BitString from_hex(std::string_view hex, std::size_t bit_length);

  // `width`-bit big-endian representation of `value`.
  static BitString from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitString& other);
  void append_uint(std::uint64_t value, std::size_t width);

  // Big-endian value of bits [offset, offset + width); width <= 64.
  std::uint64_t read_uint(std::size_t offset, std::size_t width) const;

  BitString prefix(std::size_t length) const;
  BitString slice(std::size_t offset, std::size_t length) const;

  // Appends zero bits until the length is a multiple of `boundary`.
  BitString padded_to(std::size_t boundary) const;

  std::string to_binary() const;
  // Hex digits covering ceil(size / 4) nibbles, uppercase, zero-filled tail.
  std::string to_hex() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// "len=<bits> hex=<digits>", the interchange form for messages.
std::string format_message(const BitString& bits);
BitString parse_message(std::string_view text);

}  // namespace maskstego

#endif  // MASKSTEGO_BITSTRING_H_
