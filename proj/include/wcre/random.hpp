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

#ifndef WCRE_RANDOM_HPP_
#define WCRE_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace wcre {

// splitmix64 finaliser; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives the key of a substream from a master seed and a path of counters
// (purpose tag, sample size, replicate index, ...). Streams are a pure
// function of the path, which is what makes replicate loops independent of
// how they are scheduled.
std::uint64_t derive_stream_key(std::uint64_t master,
                                std::initializer_list<std::uint64_t> path) noexcept;

// xoshiro256** seeded from a stream key through splitmix64.
// Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  // Uniform on the open interval (0, 1): (k + 1/2) * 2^-53, k in [0, 2^53).
  double uniform_open() noexcept;

 private:
  std::array<std::uint64_t, 4> state_{};
};

// Purpose tags for derive_stream_key.
enum class StreamTag : std::uint64_t {
  kNullCritical = 1,
  kAlternative = 2,
  kBootstrap = 3,
  kClassicalBootstrap = 4,
  kUser = 5,
};

inline Rng make_stream(std::uint64_t master, StreamTag tag, std::uint64_t a,
                       std::uint64_t b = 0) noexcept {
  return Rng(derive_stream_key(master, {static_cast<std::uint64_t>(tag), a, b}));
}

}  // namespace wcre

#endif  // WCRE_RANDOM_HPP_
