#pragma once

#include "symgate/entangling.hpp"

namespace symgate {

// Symmetric two-qubit pure state as 3 amplitudes in the CompSym basis.
struct SymmetricState {
  Eigen::Vector3cd amplitudes;
};

struct MajoranaStar {
  double theta;  // [0, pi]
  double phi;    // [0, 2*pi); fixed to 0 at the poles
};

// Two stars, unordered; equality is up to permutation.
struct Constellation {
  std::array<MajoranaStar, 2> stars;
};

Eigen::Vector3d star_unit_vector(const MajoranaStar& star);

// Roots of the degree-2 star polynomial a0*z^2 - sqrt(2)*a1*z + a2,
// projected by z = tan(theta/2)*e^{i phi}. A vanishing leading coefficient
// contributes one star at theta = pi per lost degree.
Constellation stars_of(const SymmetricState& state);

// Normalized symmetrized product of the two single-qubit states
// (cos(theta/2), e^{i phi} sin(theta/2)).
SymmetricState state_from_stars(const Constellation& stars);

// Concurrence |chi^T P chi| of the embedded two-qubit vector.
double concurrence(const SymmetricState& state);

// Euclidean distance between the two stars' unit vectors, in [0, 2].
double chordal_distance(const Constellation& stars);

// Regular (theta, phi) grid of output linear entropies; theta spans [0, pi]
// and phi spans [0, 2*pi], both inclusive. Values row-major, theta outer.
struct EntropyGrid {
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const {
    return values[i * phis.size() + j];
  }
};

EntropyGrid entropy_sphere(const SymmetricGate& g, int n_theta, int n_phi);

}  // namespace symgate
