// SPDX-License-Identifier: Apache-2.0
//
// sixdma: discrete six-dimensional movable antenna reconfiguration
// Copyright (C) 2026 The sixdma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace sixdma {

// SplitMix64 used both as a seed mixer and as a small counter-based engine.
// Substreams are derived by hashing (master seed, tag, coordinates), so the
// draws for one (user, surface, slot) never depend on evaluation order.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Stream tags keep unrelated consumers of one master seed apart.
enum class StreamTag : std::uint64_t {
  kChannel = 1,
  kMobility = 2,
  kLibrarySamples = 3,
  kLibraryClustering = 4,
  kTest = 99,
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) noexcept;

/// Derive an independent engine for the given coordinates.
SplitMix64 substream(std::uint64_t master, StreamTag tag,
                     std::initializer_list<std::uint64_t> coords) noexcept;

}  // namespace sixdma
