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


#include "maskstego/safetensors.h"

#include <bit>
#include <cstring>

#include "json.hpp"
#include "maskstego/digest.h"
#include "maskstego/error.h"

namespace maskstego {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw StegoError(ErrorCode::kParse, "safetensors: " + what);
}

std::uint64_t read_le64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

float half_to_float(std::uint16_t h) {
  std::uint32_t sign = static_cast<std::uint32_t>(h & 0x8000) << 16;
  std::uint32_t exp = (h >> 10) & 0x1F;
  std::uint32_t mant = h & 0x3FF;
  std::uint32_t bits;
  if (exp == 0) {
    if (mant == 0) {
      bits = sign;
    } else {
      // Subnormal: renormalize.
      int e = -1;
      do {
        ++e;
        mant <<= 1;
      } while ((mant & 0x400) == 0);
      bits = sign | static_cast<std::uint32_t>(127 - 15 - e) << 23 |
             (mant & 0x3FF) << 13;
    }
  } else if (exp == 0x1F) {
    bits = sign | 0x7F800000u | mant << 13;
  } else {
    bits = sign | (exp + 127 - 15) << 23 | mant << 13;
  }
  return std::bit_cast<float>(bits);
}

float bfloat16_to_float(std::uint16_t b) {
  return std::bit_cast<float>(static_cast<std::uint32_t>(b) << 16);
}

SafetensorsFile SafetensorsFile::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

SafetensorsFile SafetensorsFile::parse(std::string_view bytes) {
  if (bytes.size() < 8) fail("file too short");
  const auto* base = reinterpret_cast<const unsigned char*>(bytes.data());
  std::uint64_t header_len = read_le64(base);
  if (header_len > bytes.size() - 8) fail("header length exceeds file size");

  nlohmann::json header;
  try {
    auto text = bytes.substr(8, header_len);
    header = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("bad header: ") + e.what());
  }
  if (!header.is_object()) fail("header is not an object");

  std::string_view data = bytes.substr(8 + header_len);
  const auto* raw = reinterpret_cast<const unsigned char*>(data.data());

  SafetensorsFile out;
  for (const auto& [name, info] : header.items()) {
    if (name == "__metadata__") continue;
    try {
      std::string dtype = info.at("dtype").get<std::string>();
      auto shape = info.at("shape").get<std::vector<std::int64_t>>();
      auto offsets = info.at("data_offsets").get<std::vector<std::uint64_t>>();
      if (offsets.size() != 2 || offsets[0] > offsets[1] ||
          offsets[1] > data.size()) {
        fail("bad data_offsets for " + name);
      }
      std::size_t count = 1;
      for (auto d : shape) {
        if (d < 0) fail("negative dimension in " + name);
        count *= static_cast<std::size_t>(d);
      }
      std::size_t width = dtype == "F32" ? 4 : (dtype == "F16" || dtype == "BF16") ? 2 : 0;
      if (width == 0) fail("unsupported dtype " + dtype + " for " + name);
      if (offsets[1] - offsets[0] != count * width) {
        fail("byte size mismatch for " + name);
      }
      Tensor t;
      t.shape = std::move(shape);
      t.values.resize(count);
      const unsigned char* p = raw + offsets[0];
      for (std::size_t i = 0; i < count; ++i, p += width) {
        if (width == 4) {
          std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                               static_cast<std::uint32_t>(p[1]) << 8 |
                               static_cast<std::uint32_t>(p[2]) << 16 |
                               static_cast<std::uint32_t>(p[3]) << 24;
          t.values[i] = std::bit_cast<float>(bits);
        } else {
          auto bits = static_cast<std::uint16_t>(p[0] | p[1] << 8);
          t.values[i] = dtype == "F16" ? half_to_float(bits)
                                       : bfloat16_to_float(bits);
        }
      }
      out.tensors_.emplace(name, std::move(t));
    } catch (const nlohmann::json::exception& e) {
      fail("bad entry for " + name + ": " + e.what());
    }
  }
  return out;
}

const Tensor& SafetensorsFile::tensor(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) fail("missing tensor " + name);
  return it->second;
}

std::vector<std::string> SafetensorsFile::names() const {
  std::vector<std::string> out;
  for (const auto& [name, t] : tensors_) out.push_back(name);
  return out;
}

}  // namespace maskstego
