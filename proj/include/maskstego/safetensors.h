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


#ifndef MASKSTEGO_SAFETENSORS_H_
#define MASKSTEGO_SAFETENSORS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<float> values;  // row-major

  std::size_t numel() const { return values.size(); }
};

// Reader for the safetensors container: an 8-byte little-endian header
// length, a JSON header mapping names to {dtype, shape, data_offsets}, then
// the raw little-endian tensor bytes. F32, F16 and BF16 tensors are widened
// to float on load.
class SafetensorsFile {
 public:
  // Throws StegoError(kIo) or StegoError(kParse).
  static SafetensorsFile load(const std::filesystem::path& path);
  static SafetensorsFile parse(std::string_view bytes);

  bool contains(const std::string& name) const {
    return tensors_.contains(name);
  }
  // Throws StegoError(kParse) when missing.
  const Tensor& tensor(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Tensor> tensors_;
};

float half_to_float(std::uint16_t bits);
float bfloat16_to_float(std::uint16_t bits);

}  // namespace maskstego

#endif  // MASKSTEGO_SAFETENSORS_H_
