#pragma once

#include <array>
#include <vector>

#include "symgate/gates.hpp"

namespace symgate {

// Phases of the eigenvalues of m = U_B^T U_B, ascending in (-pi, pi].
struct EigenPhaseTriple {
  double mu1;
  double mu2;
  double mu3;
};

struct LocalInvariant {
  Complex g;     // (Tr m)^2 / 9 on the su3-normalized gate
  double abs_g;  // |g|, clamped into [0, 1]
};

// Coordinates on the Weyl chamber triangle, 0 <= s2 <= s1 <= 1, with respect
// to the chamber vectors v_x, v_y below.
struct ChamberCoords {
  double s1;
  double s2;
};

struct WeylReduction {
  GeometricPoint point;  // s1*v_x + s2*v_y
  ChamberCoords coords;
};

// su(3) root and chamber constants on the plane c1+c2+c3 = 0.
const Eigen::Vector3d& root_alpha1();  // pi*(-1, 0, 1)
const Eigen::Vector3d& root_alpha2();  // pi*(0, 1, -1)
const Eigen::Vector3d& chamber_vx();   // (pi/2)*(-1, 1, 0)
const Eigen::Vector3d& chamber_vy();   // (pi/6)*(-1, -1, 2)

// Householder reflection across the plane normal to beta.
Eigen::Matrix3d reflection_matrix(const Eigen::Vector3d& beta);

// The three positive root directions and the three directions bisecting
// successive roots (reflections across the latter conjugate the class).
const std::array<Eigen::Vector3d, 3>& root_directions();
const std::array<Eigen::Vector3d, 3>& bisector_directions();

// m = U_B^T U_B on the su3-normalized Bell-basis matrix of g.
Matrix3c m_matrix(const SymmetricGate& g);

LocalInvariant invariant_G(const SymmetricGate& g);

// 1 - (4/9)[sin^2(c1-c2) + sin^2(c1-c3) + sin^2(c3-c2)], clamped into [0,1].
double abs_g_from_point(const GeometricPoint& c);

// Tr m for a point on the O-plane, evaluated from the eigenphases.
Complex trace_m_from_point(const GeometricPoint& c);

// Eigenphases of a geometric point after projecting onto the O-plane:
// mu = (c1-c2+c3, c1+c2-c3, -c1+c2+c3), each wrapped to (-pi, pi].
EigenPhaseTriple phases_from_point(const GeometricPoint& c);

EigenPhaseTriple eigenphases_of_m(const SymmetricGate& g);

// Canonical chamber representative of the gate's local equivalence class.
GeometricPoint point_from_gate(const SymmetricGate& g);

// Projects out the (1,1,1) component, reduces modulo the root lattice, and
// folds through the Weyl group and the conjugation reflections into the
// chamber triangle 0 <= s2 <= s1 <= 1; ties resolved toward smaller s2.
WeylReduction weyl_reduce(const GeometricPoint& c);

struct OPlaneRecord {
  GeometricPoint c;
  ChamberCoords s;
  double arg_tr_m;
  double abs_g;
  double ep;
  bool perfect;
};

// Rasterizes the primitive cell spanned by alpha1, alpha2: resolution^2
// records at c = (i/resolution)*alpha1 + (j/resolution)*alpha2, i outer.
std::vector<OPlaneRecord> oplane_grid(int resolution);

}  // namespace symgate
