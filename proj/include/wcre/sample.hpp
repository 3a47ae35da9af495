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

#ifndef WCRE_SAMPLE_HPP_
#define WCRE_SAMPLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace wcre {

// A finite set of non-negative observations, kept sorted ascending.
class Sample {
 public:
  // Throws DataError if values is empty or holds a negative or non-finite
  // entry.
  explicit Sample(std::vector<double> values);

  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] double min() const noexcept { return values_.front(); }
  [[nodiscard]] double max() const noexcept { return values_.back(); }

  // Every observation multiplied by factor > 0.
  [[nodiscard]] Sample scaled(double factor) const;

 private:
  struct Presorted {};
  Sample(Presorted, std::vector<double> values) noexcept : values_(std::move(values)) {}

  std::vector<double> values_;
};

}  // namespace wcre

#endif  // WCRE_SAMPLE_HPP_
