#include "symgate/majorana.hpp"

#include <cmath>

namespace symgate {

namespace {

MajoranaStar star_from_root(const Complex& z) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  const double theta = 2.0 * std::atan(r);
  double phi = std::arg(z);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {theta, phi};
}

const Matrix4c& p_matrix() {
  static const Matrix4c p = [] {
    Matrix4c m = Matrix4c::Zero();
    m(0, 3) = 1.0;
    m(1, 2) = -1.0;
    m(2, 1) = -1.0;
    m(3, 0) = 1.0;
    return m;
  }();
  return p;
}

}  // namespace

Eigen::Vector3d star_unit_vector(const MajoranaStar& star) {
  const double st = std::sin(star.theta);
  return {st * std::cos(star.phi), st * std::sin(star.phi),
          std::cos(star.theta)};
}

Constellation stars_of(const SymmetricState& state) {
  const double norm = state.amplitudes.norm();
  if (norm < 1e-12) throw std::invalid_argument("stars_of: zero state");
  const Eigen::Vector3cd a = state.amplitudes / norm;

  const Complex a0 = a[0];
  const Complex a1 = a[1];
  const Complex a2 = a[2];

  if (std::abs(a0) == 0.0) {
    if (std::abs(a1) == 0.0) return {{MajoranaStar{kPi, 0.0}, {kPi, 0.0}}};
    // Degree drops to 1: one star at the south pole, one finite root.
    const Complex z = a2 / (std::sqrt(2.0) * a1);
    return {{MajoranaStar{kPi, 0.0}, star_from_root(z)}};
  }

  // a0 z^2 + b z + c with the cancellation-free quadratic branch.
  const Complex b = -std::sqrt(2.0) * a1;
  const Complex c = a2;
  Complex s = std::sqrt(b * b - 4.0 * a0 * c);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex q = -0.5 * (b + s);
  Complex z1, z2;
  if (std::abs(q) == 0.0) {
    z1 = Complex{0.0, 0.0};
    z2 = -b / a0;
  } else {
    z1 = q / a0;
    z2 = c / q;
  }
  return {{star_from_root(z1), star_from_root(z2)}};
}

SymmetricState state_from_stars(const Constellation& stars) {
  const auto& [s1, s2] = stars.stars;
  const Complex u10{std::cos(s1.theta / 2.0), 0.0};
  const Complex u11 = std::polar(std::sin(s1.theta / 2.0), s1.phi);
  const Complex u20{std::cos(s2.theta / 2.0), 0.0};
  const Complex u21 = std::polar(std::sin(s2.theta / 2.0), s2.phi);

  Eigen::Vector3cd a;
  a << 2.0 * u10 * u20, std::sqrt(2.0) * (u10 * u21 + u11 * u20),
      2.0 * u11 * u21;
  return {a / a.norm()};
}

double concurrence(const SymmetricState& state) {
  const Eigen::Vector3cd& a = state.amplitudes;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd chi;
  chi << a[0], r * a[1], r * a[1], a[2];
  const Complex pairing = chi.transpose() * p_matrix() * chi;
  double c = std::abs(pairing);
  if (c > 1.0 && c < 1.0 + 1e-12) c = 1.0;
  return std::min(c, 1.0);
}

double chordal_distance(const Constellation& stars) {
  return (star_unit_vector(stars.stars[0]) - star_unit_vector(stars.stars[1]))
      .norm();
}

EntropyGrid entropy_sphere(const SymmetricGate& g, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw std::invalid_argument("entropy_sphere: grid must be at least 2x2");
  }
  EntropyGrid grid;
  grid.thetas.resize(static_cast<std::size_t>(n_theta));
  grid.phis.resize(static_cast<std::size_t>(n_phi));
  for (int i = 0; i < n_theta; ++i) grid.thetas[i] = i * kPi / (n_theta - 1);
  for (int j = 0; j < n_phi; ++j) grid.phis[j] = j * kTwoPi / (n_phi - 1);

  grid.values.reserve(grid.thetas.size() * grid.phis.size());
  for (const double theta : grid.thetas) {
    for (const double phi : grid.phis) {
      grid.values.push_back(linear_entropy_after(g, theta, phi));
    }
  }
  return grid;
}

}  // namespace symgate
