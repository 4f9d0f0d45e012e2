#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "symgate/errors.hpp"

namespace symgate {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

// Wraps an angle into (-pi, pi]; a tie at -pi maps to +pi.
inline double canonical_phase(double x) {
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r = kPi;
  return r;
}

// max|M^dagger M - I|
double unitarity_residual(const Eigen::MatrixXcd& m);

// max|M - M^dagger|
double hermiticity_residual(const Eigen::MatrixXcd& m);

inline bool is_unitary(const Eigen::MatrixXcd& m, double tol = kUnitaryTol) {
  return unitarity_residual(m) < tol;
}

// Arguments of the eigenvalues of a unitary matrix (dim <= 4), each in
// (-pi, pi], sorted ascending. Throws NotUnitaryError when the input fails
// the unitarity check or an eigenvalue modulus strays from 1 beyond 1e-9.
std::vector<double> unitary_eigenphases(const Eigen::MatrixXcd& m);

// exp(-i H t) for hermitian H (dim <= 4), via spectral decomposition.
Eigen::MatrixXcd hermitian_expm(const Eigen::MatrixXcd& h, double t);

struct SpherePoint {
  double theta;  // [0, pi]
  double phi;    // [0, 2*pi)
};

// Counter-based uniform sphere sampler. The stream is the SplitMix64
// finalizer evaluated at seed + k*gamma for k = 1, 2, ...; jumping to any
// counter value is O(1), so independently seeded or offset samplers can be
// handed to parallel workers. Identical (seed, counter) gives a bit-exact
// identical stream. Each sphere point consumes two draws: cos(theta) uniform
// on [-1, 1], then phi uniform on [0, 2*pi).
class SphereSampler {
 public:
  explicit SphereSampler(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  double next_double();  // uniform [0, 1), 53-bit
  SpherePoint next_point();

 private:
  std::uint64_t next_u64();
  std::uint64_t seed_;
  std::uint64_t counter_;
};

// n uniform sphere points, advancing the sampler. Throws on n = 0.
std::vector<SpherePoint> sample_sphere(SphereSampler& sampler, std::size_t n);

}  // namespace symgate
