// Copyright 2026 The qsw Authors.
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

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "qsw/errors.hpp"
#include "qsw/nsbox.hpp"

namespace qsw {

inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Pure two-qubit state cos(theta)|00> + sin(theta)|11>. theta = pi/4 is
// maximally entangled, theta -> 0 approaches a product state.
class SchmidtState {
 public:
  explicit SchmidtState(double theta) : theta_(theta) {
    if (!(theta >= 0.0 && theta <= kQuarterPi)) {
      throw DomainError("Schmidt angle must lie in [0, pi/4]");
    }
    const auto amp = amplitudes();
    double norm2 = 0.0;
    for (double a : amp) norm2 += a * a;
    if (std::abs(norm2 - 1.0) > 1e-12) {
      throw DomainError("state amplitudes are not normalized");
    }
  }

  double theta() const { return theta_; }

  // Amplitudes over the computational basis |00>,|01>,|10>,|11>.
  std::array<double, 4> amplitudes() const {
    return {std::cos(theta_), 0.0, 0.0, std::sin(theta_)};
  }

 private:
  double theta_;
};

// Two-outcome projective observable n . sigma with outcomes +1/-1.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::array<double, 3> bloch) : bloch_(bloch) {
    const double norm = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] +
                                  bloch[2] * bloch[2]);
    if (std::abs(norm - 1.0) > 1e-12) {
      throw DomainError("Bloch vector must have unit length");
    }
  }

  // cos(phi) sigma_z + sin(phi) sigma_x.
  static ProjectiveMeasurement from_xz_angle(double phi) {
    return ProjectiveMeasurement({std::sin(phi), 0.0, std::cos(phi)});
  }

  const std::array<double, 3>& bloch() const { return bloch_; }

 private:
  std::array<double, 3> bloch_;
};

struct QuantumStrategy {
  SchmidtState state;
  std::array<ProjectiveMeasurement, 2> alice;  // x_A = 0, 1
  std::array<ProjectiveMeasurement, 2> bob;    // x_B = 0, 1
};

namespace detail {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;    // row-major 2x2
using Mat4 = std::array<Complex, 16>;   // row-major 4x4

inline Mat2 observable(const std::array<double, 3>& n) {
  return {Complex(n[2], 0.0), Complex(n[0], -n[1]),
          Complex(n[0], n[1]), Complex(-n[2], 0.0)};
}

inline Mat2 identity2() {
  return {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
          Complex(1.0, 0.0)};
}

inline Mat4 kron(const Mat2& x, const Mat2& y) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          out[(2 * i + k) * 4 + (2 * j + l)] = x[i * 2 + j] * y[k * 2 + l];
        }
      }
    }
  }
  return out;
}

inline Mat4 density_operator(const std::array<double, 4>& psi) {
  Mat4 rho;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rho[i * 4 + j] = Complex(psi[i] * psi[j], 0.0);
    }
  }
  return rho;
}

inline double trace_product(const Mat4& rho, const Mat4& op) {
  Complex tr(0.0, 0.0);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      tr += rho[i * 4 + k] * op[k * 4 + i];
    }
  }
  return tr.real();
}

}  // namespace detail

// Input-output distribution of the strategy via the Born rule:
// P(a,b|x,y) = (1 + a<A_x> + b<B_y> + ab<A_x B_y>) / 4 with the expectations
// taken against the 4x4 density operator. Projective measurements on a shared
// state cannot signal, so the result always passes NSBox validation.
inline NSBox born_box(const QuantumStrategy& strategy) {
  const detail::Mat4 rho =
      detail::density_operator(strategy.state.amplitudes());
  const detail::Mat2 eye = detail::identity2();

  std::array<double, 2> mean_a, mean_b;
  std::array<std::array<double, 2>, 2> mean_ab;
  for (int x = 0; x < 2; ++x) {
    const detail::Mat2 a_op = detail::observable(strategy.alice[x].bloch());
    mean_a[x] = detail::trace_product(rho, detail::kron(a_op, eye));
    for (int y = 0; y < 2; ++y) {
      const detail::Mat2 b_op = detail::observable(strategy.bob[y].bloch());
      if (x == 0) {
        mean_b[y] = detail::trace_product(rho, detail::kron(eye, b_op));
      }
      mean_ab[x][y] = detail::trace_product(rho, detail::kron(a_op, b_op));
    }
  }

  FullTable table;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int o_a = 0; o_a < 2; ++o_a) {
        for (int o_b = 0; o_b < 2; ++o_b) {
          const double sa = o_a == 0 ? 1.0 : -1.0;
          const double sb = o_b == 0 ? 1.0 : -1.0;
          table.at(x, y, o_a, o_b) =
              0.25 * (1.0 + sa * mean_a[x] + sb * mean_b[y] +
                      sa * sb * mean_ab[x][y]);
        }
      }
    }
  }
  return from_table(table);
}

namespace detail {

inline void check_theta_domain(double theta) {
  if (!(theta > 0.0 && theta <= kQuarterPi)) {
    throw DomainError("Schmidt angle must lie in (0, pi/4]");
  }
}

}  // namespace detail

// Tilt parameter whose optimal state has Schmidt angle theta:
// zeta = 2 / sqrt(1 + 2 tan^2 2theta), evaluated in the equivalent stable
// form 2 cos(2theta) / sqrt(1 + sin^2 2theta).
inline double zeta_from_theta(double theta) {
  detail::check_theta_domain(theta);
  const double s = std::sin(2.0 * theta);
  return 2.0 * std::cos(2.0 * theta) / std::sqrt(1.0 + s * s);
}

// Inverse map on zeta in [0,2): theta = atan(sqrt((4-zeta^2)/(2 zeta^2)))/2,
// with the zeta = 0 endpoint pinned to pi/4.
inline double theta_from_zeta(double zeta) {
  if (!(zeta >= 0.0 && zeta < 2.0)) {
    throw DomainError("tilt parameter must lie in [0,2)");
  }
  if (zeta == 0.0) return kQuarterPi;
  return 0.5 * std::atan(std::sqrt((4.0 - zeta * zeta) / (2.0 * zeta * zeta)));
}

// Measurements that maximize the tilted expression at this Schmidt angle:
// Alice sigma_z and sigma_x, Bob cos(beta) sigma_z +/- sin(beta) sigma_x with
// tan(beta) = sin(2theta).
inline QuantumStrategy optimal_tilted_strategy(double theta) {
  detail::check_theta_domain(theta);
  const double beta = std::atan(std::sin(2.0 * theta));
  return QuantumStrategy{
      SchmidtState(theta),
      {ProjectiveMeasurement({0.0, 0.0, 1.0}),
       ProjectiveMeasurement({1.0, 0.0, 0.0})},
      {ProjectiveMeasurement::from_xz_angle(beta),
       ProjectiveMeasurement::from_xz_angle(-beta)}};
}

struct ClosedFormComponents {
  double m0 = 0.0;
  double n0 = 0.0;
  double bchsh = 0.0;
};

// Canonical parameters of born_box(optimal_tilted_strategy(theta)) in closed
// form: m_0 = cos^2 theta, n_0 = (1 + cos 2theta / sqrt(1 + sin^2 2theta))/2,
// B_CHSH = (3 - cos 4theta) / sqrt(1 + sin^2 2theta).
inline ClosedFormComponents closed_form_components(double theta) {
  detail::check_theta_domain(theta);
  const double s2 = std::sin(2.0 * theta);
  const double root = std::sqrt(1.0 + s2 * s2);
  ClosedFormComponents out;
  out.m0 = std::cos(theta) * std::cos(theta);
  out.n0 = 0.5 * (1.0 + std::cos(2.0 * theta) / root);
  out.bchsh = (3.0 - std::cos(4.0 * theta)) / root;
  return out;
}

// Maximum of B_CHSH + 2 zeta m_0 over quantum strategies:
// sqrt(8 + 2 zeta^2) + zeta, attained by optimal_tilted_strategy at the
// matching Schmidt angle. Exceeds the local bound 2 + 2 zeta on all of [0,2).
inline double tilted_quantum_max(double zeta) {
  if (!(zeta >= 0.0 && zeta < 2.0)) {
    throw DomainError("tilt parameter must lie in [0,2)");
  }
  return std::sqrt(8.0 + 2.0 * zeta * zeta) + zeta;
}

}  // namespace qsw
