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

#include "maskstego/config.h"

#include <cmath>

#include "maskstego/error.h"

namespace maskstego {

StegoConfig validate_config(StegoConfig config) {
  if (config.f == 0) {
    throw StegoError(ErrorCode::kInvalidConfig,
                     "masking interval f must be at least 1");
  }
  if (!std::isfinite(config.p) || config.p <= 0.0 || config.p >= 1.0) {
    throw StegoError(ErrorCode::kInvalidConfig,
                     "probability threshold p must lie in (0, 1)");
  }
  if (const auto* fixed = std::get_if<FixedFraming>(&config.framing)) {
    if (fixed->bit_count == 0) {
      throw StegoError(ErrorCode::kInvalidConfig,
                       "fixed framing needs a positive bit count");
    }
  } else if (std::get<HeaderFraming>(config.framing).width != kHeaderWidth) {
    throw StegoError(ErrorCode::kInvalidConfig,
                     "header framing width must be " +
                         std::to_string(kHeaderWidth) + " bits");
  }
  return config;
}

std::string framing_name(const Framing& framing) {
  if (const auto* fixed = std::get_if<FixedFraming>(&framing)) {
    return "fixed:" + std::to_string(fixed->bit_count);
  }
  return "header:" + std::to_string(std::get<HeaderFraming>(framing).width);
}

}  // namespace maskstego
