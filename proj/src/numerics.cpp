#include "symgate/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace symgate {

double unitarity_residual(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd d =
      m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd d = m - m.adjoint();
  return d.cwiseAbs().maxCoeff();
}

std::vector<double> unitary_eigenphases(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 4) {
    throw std::invalid_argument("unitary_eigenphases: dim must be in [1, 4]");
  }
  const double residual = unitarity_residual(m);
  if (residual >= kUnitaryTol) throw NotUnitaryError(residual);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex lambda = solver.eigenvalues()[i];
    if (std::abs(std::abs(lambda) - 1.0) > 1e-9) {
      throw NotUnitaryError(std::abs(std::abs(lambda) - 1.0));
    }
    phases.push_back(canonical_phase(std::arg(lambda)));
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

Eigen::MatrixXcd hermitian_expm(const Eigen::MatrixXcd& h, double t) {
  if (h.rows() != h.cols() || h.rows() < 1 || h.rows() > 4) {
    throw std::invalid_argument("hermitian_expm: dim must be in [1, 4]");
  }
  const double residual = hermiticity_residual(h);
  if (residual >= kHermitianTol) throw NotHermitianError(residual);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::Index n = h.rows();
  Eigen::VectorXcd diag(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    diag[i] = std::polar(1.0, -solver.eigenvalues()[i] * t);
  }
  return solver.eigenvectors() * diag.asDiagonal() *
         solver.eigenvectors().adjoint();
}

std::uint64_t SphereSampler::next_u64() {
  std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SphereSampler::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

SpherePoint SphereSampler::next_point() {
  const double cos_theta = 1.0 - 2.0 * next_double();
  const double phi = kTwoPi * next_double();
  return {std::acos(cos_theta), phi};
}

std::vector<SpherePoint> sample_sphere(SphereSampler& sampler, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample_sphere: n must be >= 1");
  std::vector<SpherePoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.push_back(sampler.next_point());
  return points;
}

}  // namespace symgate
