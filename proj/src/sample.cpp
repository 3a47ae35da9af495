// Copyright 2026 The wcre Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wcre/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcre/error.hpp"

namespace wcre {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DataError("sample: at least one observation is required");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v)) {
      throw DataError("sample: observation " + std::to_string(i + 1) + " is not finite");
    }
    if (v < 0.0) {
      throw DataError("sample: observation " + std::to_string(i + 1) + " is negative");
    }
  }
  std::sort(values_.begin(), values_.end());
}

Sample Sample::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidArgument("sample: scale factor must be positive and finite");
  }
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return Sample(Presorted{}, std::move(out));
}

}  // namespace wcre
