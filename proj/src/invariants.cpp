#include "symgate/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace symgate {

namespace {

Eigen::Vector3d scaled(double f, double x, double y, double z) {
  return Eigen::Vector3d(f * x, f * y, f * z);
}

double clamp_unit_interval(double x, double slack = 1e-12) {
  if (x < 0.0 && x > -slack) return 0.0;
  if (x > 1.0 && x < 1.0 + slack) return 1.0;
  return x;
}

// Inverts the chamber parameterization
//   mu_a = pi*(s2/3 - s1),  mu_b = -2*pi*s2/3,  mu_c = pi*(s1 + s2/3)
// against a phase triple given modulo 2*pi with mu_a+mu_b+mu_c = 0 (mod 2*pi).
// Every (gauge, conjugation, role, lattice-shift) choice that lands inside
// the triangle 0 <= s2 <= s1 <= 1 is a representative of the same class; the
// lexicographically smallest (s2, s1) wins so walls get a deterministic pick.
// The gauge loop rotates all three phases by a cube root of unity: such a
// rotation only spins the convex hull and reaches the same gate up to a
// global phase, but the principal-branch determinant root can introduce it,
// so the canonical form must quotient it out.
ChamberCoords canonical_chamber(const std::array<double, 3>& mu_in) {
  constexpr double tol = 1e-9;
  constexpr double fuzz = 1e-12;
  constexpr double third_turn = kTwoPi / 3.0;
  bool found = false;
  double best_s1 = 0.0;
  double best_s2 = 0.0;

  for (const double gauge : {0.0, third_turn, -third_turn})
  for (const int eps : {1, -1}) {
    std::array<double, 3> m{};
    for (int i = 0; i < 3; ++i) {
      m[i] = canonical_phase(eps * mu_in[i] + gauge);
    }

    for (int b = 0; b < 3; ++b) {
      // The middle role requires m_b in [-2*pi/3, 0] so that s2 in [0, 1].
      if (m[b] > tol || m[b] < -2.0 * kPi / 3.0 - tol) continue;
      const double s2 = std::clamp(-3.0 * m[b] / kTwoPi, 0.0, 1.0);

      for (int c = 0; c < 3; ++c) {
        if (c == b) continue;
        const double base = m[c] / kPi - s2 / 3.0;
        for (int k = -1; k <= 1; ++k) {
          const double s1_raw = base + 2.0 * k;
          if (s1_raw < s2 - tol || s1_raw > 1.0 + tol) continue;
          const double s1 = std::clamp(s1_raw, s2, 1.0);
          if (!found || s2 < best_s2 - fuzz ||
              (std::abs(s2 - best_s2) <= fuzz && s1 < best_s1 - fuzz)) {
            found = true;
            best_s1 = s1;
            best_s2 = s2;
          }
        }
      }
    }
  }

  if (!found) {
    throw InternalMismatchError(
        "weyl_reduce: no chamber representative found; input phases do not "
        "sum to zero modulo 2*pi");
  }
  return {best_s1, best_s2};
}

}  // namespace

const Eigen::Vector3d& root_alpha1() {
  static const Eigen::Vector3d v = scaled(kPi, -1, 0, 1);
  return v;
}

const Eigen::Vector3d& root_alpha2() {
  static const Eigen::Vector3d v = scaled(kPi, 0, 1, -1);
  return v;
}

const Eigen::Vector3d& chamber_vx() {
  static const Eigen::Vector3d v = scaled(kPi / 2.0, -1, 1, 0);
  return v;
}

const Eigen::Vector3d& chamber_vy() {
  static const Eigen::Vector3d v = scaled(kPi / 6.0, -1, -1, 2);
  return v;
}

Eigen::Matrix3d reflection_matrix(const Eigen::Vector3d& beta) {
  const Eigen::Vector3d b = beta / beta.norm();
  return Eigen::Matrix3d::Identity() - 2.0 * b * b.transpose();
}

const std::array<Eigen::Vector3d, 3>& root_directions() {
  static const std::array<Eigen::Vector3d, 3> roots = {
      root_alpha1(), root_alpha2(),
      Eigen::Vector3d(root_alpha1() + root_alpha2())};
  return roots;
}

const std::array<Eigen::Vector3d, 3>& bisector_directions() {
  static const std::array<Eigen::Vector3d, 3> dirs = {
      scaled(1.0, -2, 1, 1), scaled(1.0, -1, 2, -1), scaled(1.0, 1, 1, -2)};
  return dirs;
}

Matrix3c m_matrix(const SymmetricGate& g) {
  const SymmetricGate bell = su3_normalize(to_basis(g, BasisTag::BellSym));
  return bell.matrix.transpose() * bell.matrix;
}

LocalInvariant invariant_G(const SymmetricGate& g) {
  const Complex tr = m_matrix(g).trace();
  const Complex big_g = tr * tr / 9.0;
  return {big_g, clamp_unit_interval(std::abs(big_g))};
}

double abs_g_from_point(const GeometricPoint& c) {
  const double s12 = std::sin(c.c1 - c.c2);
  const double s13 = std::sin(c.c1 - c.c3);
  const double s32 = std::sin(c.c3 - c.c2);
  return clamp_unit_interval(
      1.0 - (4.0 / 9.0) * (s12 * s12 + s13 * s13 + s32 * s32));
}

EigenPhaseTriple phases_from_point(const GeometricPoint& c) {
  const double shift = (c.c1 + c.c2 + c.c3) / 3.0;
  const double c1 = c.c1 - shift;
  const double c2 = c.c2 - shift;
  const double c3 = c.c3 - shift;
  std::array<double, 3> mu = {canonical_phase(c1 - c2 + c3),
                              canonical_phase(c1 + c2 - c3),
                              canonical_phase(-c1 + c2 + c3)};
  std::sort(mu.begin(), mu.end());
  return {mu[0], mu[1], mu[2]};
}

Complex trace_m_from_point(const GeometricPoint& c) {
  const EigenPhaseTriple mu = phases_from_point(c);
  return std::polar(1.0, mu.mu1) + std::polar(1.0, mu.mu2) +
         std::polar(1.0, mu.mu3);
}

EigenPhaseTriple eigenphases_of_m(const SymmetricGate& g) {
  const std::vector<double> phases = unitary_eigenphases(m_matrix(g));
  return {phases[0], phases[1], phases[2]};
}

GeometricPoint point_from_gate(const SymmetricGate& g) {
  const EigenPhaseTriple mu = eigenphases_of_m(g);
  const GeometricPoint raw{0.5 * (mu.mu1 + mu.mu2), 0.5 * (mu.mu2 + mu.mu3),
                           0.5 * (mu.mu1 + mu.mu3)};
  return weyl_reduce(raw).point;
}

WeylReduction weyl_reduce(const GeometricPoint& c) {
  const EigenPhaseTriple mu = phases_from_point(c);
  const ChamberCoords s = canonical_chamber({mu.mu1, mu.mu2, mu.mu3});
  const Eigen::Vector3d point = s.s1 * chamber_vx() + s.s2 * chamber_vy();
  return {GeometricPoint::from(point), s};
}

std::vector<OPlaneRecord> oplane_grid(int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("oplane_grid: resolution must be >= 2");
  }
  std::vector<OPlaneRecord> records;
  records.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double step = 1.0 / resolution;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const Eigen::Vector3d v =
          (i * step) * root_alpha1() + (j * step) * root_alpha2();
      const GeometricPoint c = GeometricPoint::from(v);
      const WeylReduction wr = weyl_reduce(c);
      const Complex tr = trace_m_from_point(c);
      const double abs_g = abs_g_from_point(c);
      const bool perfect = wr.coords.s1 >= 0.5 - 1e-9 &&
                           wr.coords.s2 <= 1.0 - wr.coords.s1 + 1e-9;
      records.push_back({c, wr.coords,
                         canonical_phase(std::atan2(tr.imag(), tr.real())),
                         abs_g, 0.3 * (1.0 - abs_g), perfect});
    }
  }
  return records;
}

}  // namespace symgate
