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

#include "sixdma/rng.hpp"

namespace sixdma {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) noexcept {
  SplitMix64 g(seed ^ (value * 0xD6E8FEB86659FD93ULL + 0x632BE59BD9B4E019ULL));
  g();
  return g();
}

SplitMix64 substream(std::uint64_t master, StreamTag tag,
                     std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t s = mix_seed(master, static_cast<std::uint64_t>(tag));
  for (auto c : coords) s = mix_seed(s, c);
  return SplitMix64(s);
}

}  // namespace sixdma
