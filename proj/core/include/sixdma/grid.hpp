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

#include <vector>

#include "sixdma/types.hpp"

namespace sixdma {

/// Uniform square grid over the service area [0, X] x [0, Y].
/// Grid g = gy * nx + gx; centers at ((gx + 0.5) W, (gy + 0.5) W, z_veh).
struct GridSpec {
  double extent_x = 300.0;
  double extent_y = 300.0;
  double width = 15.0;
  double z_veh = 1.5;

  int nx() const;
  int ny() const;
  int count() const { return nx() * ny(); }
  Vec3 center(int g) const;
  int gx(int g) const { return g % nx(); }
  int gy(int g) const { return g / nx(); }
  /// Grid containing the horizontal point (x, y); edges clamp inward.
  int index_of(double x, double y) const;
  void validate() const;
};

}  // namespace sixdma
