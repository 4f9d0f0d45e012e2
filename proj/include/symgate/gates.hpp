#pragma once

#include "symgate/numerics.hpp"

namespace symgate {

// Basis a 3x3 gate matrix is expressed in:
//   CompSym: {|00>, (|01>+|10>)/sqrt(2), |11>}
//   Spin1:   {|1,1>, |1,0>, |1,-1>}  (same coordinates as CompSym)
//   BellSym: the three symmetric Bell vectors, in the row order of the
//            Bell transform below
enum class BasisTag { CompSym, Spin1, BellSym };

struct SymmetricGate {
  Matrix3c matrix = Matrix3c::Identity();
  BasisTag basis = BasisTag::CompSym;
};

struct TwoQubitGate {
  Matrix4c matrix = Matrix4c::Identity();
};

// Cartan coordinates (c1, c2, c3) of a local equivalence class. Unrestricted
// at construction; weyl_reduce canonicalizes.
struct GeometricPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  Eigen::Vector3d vec() const { return {c1, c2, c3}; }
  static GeometricPoint from(const Eigen::Vector3d& v) {
    return {v[0], v[1], v[2]};
  }
};

// Unitarity-checked constructor; throws NotUnitaryError.
SymmetricGate make_gate(const Matrix3c& matrix, BasisTag basis);

// 4x4 transform from computational coordinates {|00>,|01>,|10>,|11>} to Bell
// coordinates. The last row is the antisymmetric Bell vector.
const Matrix4c& bell_q_matrix();

// 3x3 unitary change of basis from Spin1 (equivalently CompSym) coordinates
// to the symmetric Bell coordinates.
const Matrix3c& spin1_bell_matrix();

// Spin-1 angular momentum matrices in the Spin1 basis.
const Matrix3c& spin1_jx();
const Matrix3c& spin1_jy();
const Matrix3c& spin1_jz();

SymmetricGate to_basis(const SymmetricGate& g, BasisTag target);

// Divides by the principal cube root of det(g); result has |det - 1| < 1e-9.
SymmetricGate su3_normalize(const SymmetricGate& g);

// Diagonal Bell-basis gate of a geometric point:
// diag(e^{i(c1-c2+c3)/2}, e^{i(c1+c2-c3)/2}, e^{i(-c1+c2+c3)/2}).
SymmetricGate gate_from_point(const GeometricPoint& c);

// Block 4x4 gate acting as g on the symmetric subspace and as identity on
// the antisymmetric Bell state, in computational coordinates.
TwoQubitGate embed_reducible(const SymmetricGate& g);

// True iff v maps the symmetric subspace to itself within tol.
bool is_reducible(const TwoQubitGate& v, double tol = 1e-9);

// exp(-i * angle * axis.J) in the Spin1 basis; axis must be unit length.
SymmetricGate local_rotation(const Eigen::Vector3d& axis, double angle);

// Haar-distributed SU(3) gate: QR orthonormalization of a complex Gaussian
// matrix with the R-diagonal phase fix, then su3_normalize. Deterministic
// per seed.
SymmetricGate random_gate(std::uint64_t seed);

}  // namespace symgate
