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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "sixdma/geometry.hpp"
#include "sixdma/rng.hpp"
#include "sixdma/types.hpp"

namespace sixdma {

double dbm_to_watt(double dbm);
double db_to_linear(double db);

/// Thermal noise power in W for the given bandwidth and noise figure.
double thermal_noise_watt(double bandwidth_hz, double noise_figure_db,
                          double noise_psd_dbm_hz = -174.0);

struct RadioParams {
  double carrier_freq_hz = 3.5e9;
  double bandwidth_hz = 20e6;
  double tx_power_w = 0.2;          // per user, 23 dBm
  double noise_power_w = 3.99e-13;  // -174 dBm/Hz + 10log10(B) + 7 dB
  double g_max_dbi = 8.0;
  double phi_3db_deg = 65.0;
  double theta_3db_deg = 25.0;
  double a_m_db = 30.0;
  double d1 = 18.0;
  double d2 = 36.0;
  double sigma_sf_db = 7.82;
  int elements_per_surface = 4;     // Q, a perfect square
  double element_spacing_m = 0.0;   // 0 selects half a wavelength
  double epsilon = 1e-12;
  int n_nlos_paths = 3;

  double wavelength() const { return kSpeedOfLight / carrier_freq_hz; }
  double spacing() const { return element_spacing_m > 0.0 ? element_spacing_m : 0.5 * wavelength(); }
  int array_side() const;
  void validate() const;
};

/// Local frame of one array surface: {u, v, n} right-handed orthonormal,
/// element centers at origin + u_m u + v_m v.
struct SurfaceFrame {
  Vec3 origin;
  Vec3 normal;
  Vec3 u;
  Vec3 v;
  std::vector<std::array<double, 2>> offsets;
};

/// A receive surface in world coordinates. `id` keys the fading substream,
/// so the same physical surface sees the same fading in every scheme.
struct Surface {
  Vec3 origin;
  Vec3 normal;
  int rows = 2;
  int cols = 2;
  std::uint64_t id = 0;

  int elements() const noexcept { return rows * cols; }
};

/// Tangent basis from the reference axis e_z, or e_x when the normal is
/// (anti)parallel to e_z. Elements form a rows x cols lattice centered on
/// the origin.
SurfaceFrame make_frame(const Vec3& origin, const Vec3& normal, int rows, int cols, double spacing);

struct LocalAngles {
  double theta;  // from boresight, [0, pi]
  double phi;    // in the tangent plane, (-pi, pi]
};

/// Direction of arrival of `user` in the surface frame. A direction along
/// the normal has no tangent component and reports phi = 0.
LocalAngles local_angles(const SurfaceFrame& frame, const Vec3& user);

/// 3GPP sectored element pattern in dBi. Angles in radians.
double element_gain_db(const RadioParams& params, double theta, double phi);

double los_probability(double distance, double d1 = 18.0, double d2 = 36.0);

enum class LinkState { kLos, kNlos };

double path_loss_los_db(double distance, double fc_ghz);
double path_loss_nlos_mean_db(double distance, double fc_ghz);

/// UMi path loss in dB; the NLoS branch adds N(0, sigma_sf^2) shadowing.
template <class Rng>
double path_loss_db(LinkState state, double distance, double fc_ghz, double sigma_sf_db, Rng& rng);

/// Test and calibration hooks for channel assembly.
struct ChannelControls {
  std::optional<LinkState> forced_state;
  bool unit_fading = false;  // xi = 1 and no shadowing
};

/// K x N channel, row k is user k's response across all surface elements,
/// surfaces concatenated in the given order. Deterministic in (seed, slot).
/// Throws std::invalid_argument if a user is within 0.1 m of a surface.
Eigen::MatrixXcd assemble_channel(std::span<const Surface> surfaces, std::span<const Vec3> users,
                                  const RadioParams& params, std::uint64_t seed, std::uint64_t slot,
                                  const ChannelControls& controls = {});

struct RateResult {
  Eigen::VectorXd sinr;
  double sum_rate_bps = 0.0;
};

/// Matched-filter SINR with the regularized interference term and the sum
/// rate B * sum log2(1 + sinr).
RateResult sinr_and_rate(const Eigen::MatrixXcd& channel, const RadioParams& params);
RateResult sinr_and_rate(const Eigen::MatrixXcd& channel, std::span<const double> tx_power_w,
                         const RadioParams& params);

/// World-frame surfaces for catalog entries, ordered by (position, orientation).
std::vector<Surface> surfaces_from_deployment(const ConfigSpace& space, const Deployment& dep,
                                              const Vec3& bs_position, const RadioParams& params);

std::uint64_t catalog_surface_id(int position, int orientation);

// ---------------------------------------------------------------------------

template <class Rng>
double path_loss_db(LinkState state, double distance, double fc_ghz, double sigma_sf_db, Rng& rng) {
  if (state == LinkState::kLos) return path_loss_los_db(distance, fc_ghz);
  std::normal_distribution<double> shadow(0.0, sigma_sf_db);
  return path_loss_nlos_mean_db(distance, fc_ghz) + shadow(rng);
}

}  // namespace sixdma
