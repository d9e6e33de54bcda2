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

#include "sixdma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace sixdma {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double thermal_noise_watt(double bandwidth_hz, double noise_figure_db, double noise_psd_dbm_hz) {
  return dbm_to_watt(noise_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

int RadioParams::array_side() const {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(elements_per_surface))));
  return side;
}

void RadioParams::validate() const {
  if (!(carrier_freq_hz > 0 && bandwidth_hz > 0 && tx_power_w > 0 && noise_power_w > 0))
    throw std::invalid_argument("radio: frequencies and powers must be positive");
  if (!(phi_3db_deg > 0 && theta_3db_deg > 0 && a_m_db > 0 && d1 > 0 && d2 > 0 && sigma_sf_db >= 0))
    throw std::invalid_argument("radio: pattern and path-loss parameters must be positive");
  if (elements_per_surface < 1 || array_side() * array_side() != elements_per_surface)
    throw std::invalid_argument(
        fmt::format("radio: elements_per_surface {} is not a perfect square", elements_per_surface));
  if (!(epsilon > 0)) throw std::invalid_argument("radio: epsilon must be positive");
  if (n_nlos_paths < 0) throw std::invalid_argument("radio: n_nlos_paths must be >= 0");
}

SurfaceFrame make_frame(const Vec3& origin, const Vec3& normal, int rows, int cols, double spacing) {
  SurfaceFrame f;
  f.origin = origin;
  f.normal = normal.normalized();
  Vec3 u = f.normal.cross(Vec3::UnitZ());
  if (u.norm() < 1e-9) u = f.normal.cross(Vec3::UnitX());
  f.u = u.normalized();
  f.v = f.normal.cross(f.u);
  f.offsets.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      f.offsets.push_back({(c - 0.5 * (cols - 1)) * spacing, (r - 0.5 * (rows - 1)) * spacing});
  return f;
}

LocalAngles local_angles(const SurfaceFrame& frame, const Vec3& user) {
  const Vec3 diff = user - frame.origin;
  const double dist = diff.norm();
  if (dist <= 0.0) throw std::invalid_argument("local_angles: user coincides with surface origin");
  const Vec3 d = diff / dist;
  const double c = std::clamp(frame.normal.dot(d), -1.0, 1.0);
  LocalAngles a{std::acos(c), 0.0};
  const Vec3 tangent = d - c * frame.normal;
  if (tangent.norm() > 1e-12) {
    const Vec3 t = tangent.normalized();
    a.phi = std::atan2(t.dot(frame.v), t.dot(frame.u));
  }
  return a;
}

double element_gain_db(const RadioParams& params, double theta, double phi) {
  const double th = rad_to_deg(theta) / params.theta_3db_deg;
  const double ph = rad_to_deg(phi) / params.phi_3db_deg;
  const double a_h = -std::min(12.0 * ph * ph, params.a_m_db);
  const double a_v = -std::min(12.0 * th * th, params.a_m_db);
  return params.g_max_dbi - std::min(-(a_h + a_v), params.a_m_db);
}

double los_probability(double distance, double d1, double d2) {
  const double e = std::exp(-distance / d2);
  return std::min(d1 / distance, 1.0) * (1.0 - e) + e;
}

double path_loss_los_db(double distance, double fc_ghz) {
  return 32.4 + 21.0 * std::log10(distance) + 20.0 * std::log10(fc_ghz);
}

double path_loss_nlos_mean_db(double distance, double fc_ghz) {
  return 35.3 * std::log10(distance) + 22.4 + 21.3 * std::log10(fc_ghz);
}

std::uint64_t catalog_surface_id(int position, int orientation) {
  return (static_cast<std::uint64_t>(position) << 16) | static_cast<std::uint64_t>(orientation);
}

Eigen::MatrixXcd assemble_channel(std::span<const Surface> surfaces, std::span<const Vec3> users,
                                  const RadioParams& params, std::uint64_t seed, std::uint64_t slot,
                                  const ChannelControls& controls) {
  std::vector<SurfaceFrame> frames;
  frames.reserve(surfaces.size());
  Eigen::Index columns = 0;
  for (const auto& s : surfaces) {
    frames.push_back(make_frame(s.origin, s.normal, s.rows, s.cols, params.spacing()));
    columns += s.elements();
  }
  const double fc_ghz = params.carrier_freq_hz * 1e-9;
  const double wavenumber = 2.0 * kPi / params.wavelength();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Eigen::MatrixXcd H(static_cast<Eigen::Index>(users.size()), columns);
  for (std::size_t k = 0; k < users.size(); ++k) {
    const Vec3& p = users[k];
    Eigen::Index col = 0;
    for (std::size_t s = 0; s < surfaces.size(); ++s) {
      const auto& frame = frames[s];
      const double dist = (p - frame.origin).norm();
      if (dist < 0.1)
        throw std::invalid_argument(
            fmt::format("assemble_channel: user {} within 0.1 m of surface {}", k, s));
      const auto angles = local_angles(frame, p);
      const double gain = db_to_linear(element_gain_db(params, angles.theta, angles.phi));

      auto rng = substream(seed, StreamTag::kChannel, {slot, k, surfaces[s].id});
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      std::normal_distribution<double> gauss(0.0, 1.0);

      LinkState state = unif(rng) < los_probability(dist, params.d1, params.d2) ? LinkState::kLos
                                                                                : LinkState::kNlos;
      if (controls.forced_state) state = *controls.forced_state;

      // Paths share the direct geometry, so their sum factors out of the
      // per-element phase term.
      std::complex<double> path_sum{0.0, 0.0};
      auto add_path = [&](LinkState path_state) {
        double pl;
        if (controls.unit_fading) {
          pl = path_state == LinkState::kLos ? path_loss_los_db(dist, fc_ghz)
                                             : path_loss_nlos_mean_db(dist, fc_ghz);
        } else {
          pl = path_loss_db(path_state, dist, fc_ghz, params.sigma_sf_db, rng);
        }
        std::complex<double> xi{1.0, 0.0};
        if (!controls.unit_fading) {
          const double re = gauss(rng);
          const double im = gauss(rng);
          xi = {re * inv_sqrt2, im * inv_sqrt2};
        }
        path_sum += std::sqrt(db_to_linear(-pl)) * xi;
      };
      if (state == LinkState::kLos) add_path(LinkState::kLos);
      for (int l = 0; l < params.n_nlos_paths; ++l) add_path(LinkState::kNlos);

      const double amp = std::sqrt(gain);
      for (const auto& [um, vm] : frame.offsets) {
        const Vec3 c = frame.origin + um * frame.u + vm * frame.v;
        const double phase = -wavenumber * (p - c).norm();
        H(static_cast<Eigen::Index>(k), col++) = amp * std::polar(1.0, phase) * path_sum;
      }
    }
  }
  return H;
}

RateResult sinr_and_rate(const Eigen::MatrixXcd& channel, std::span<const double> tx_power_w,
                         const RadioParams& params) {
  const Eigen::Index K = channel.rows();
  if (static_cast<Eigen::Index>(tx_power_w.size()) != K)
    throw std::invalid_argument("sinr_and_rate: one transmit power per user required");
  const Eigen::MatrixXcd gram = channel.conjugate() * channel.transpose();  // h_k^H h_n
  RateResult r;
  r.sinr.resize(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const double own = gram(k, k).real();
    double interference = 0.0;
    for (Eigen::Index n = 0; n < K; ++n) {
      if (n == k) continue;
      interference += tx_power_w[n] * std::norm(gram(k, n)) / (own + params.epsilon);
    }
    r.sinr(k) = tx_power_w[k] * own / (interference + params.noise_power_w);
    r.sum_rate_bps += params.bandwidth_hz * std::log2(1.0 + r.sinr(k));
  }
  return r;
}

RateResult sinr_and_rate(const Eigen::MatrixXcd& channel, const RadioParams& params) {
  std::vector<double> p(static_cast<std::size_t>(channel.rows()), params.tx_power_w);
  return sinr_and_rate(channel, p, params);
}

std::vector<Surface> surfaces_from_deployment(const ConfigSpace& space, const Deployment& dep,
                                              const Vec3& bs_position, const RadioParams& params) {
  auto entries = dep.entries;
  std::sort(entries.begin(), entries.end(), [](const SurfaceConfig& a, const SurfaceConfig& b) {
    return a.position != b.position ? a.position < b.position : a.orientation < b.orientation;
  });
  const int side = params.array_side();
  std::vector<Surface> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back({bs_position + space.position(e.position), space.orientation(e.position, e.orientation),
                   side, side, catalog_surface_id(e.position, e.orientation)});
  }
  return out;
}

}  // namespace sixdma
