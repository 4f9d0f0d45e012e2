#include "symgate/gates.hpp"

#include <cmath>

#include <Eigen/QR>

namespace symgate {

namespace {

const Complex kI{0.0, 1.0};

Matrix4c build_bell_q() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix4c q;
  q << r, 0, 0, r,           //
      0, r * kI, r * kI, 0,  //
      r * kI, 0, 0, -r * kI, //
      0, r, -r, 0;
  return q;
}

Matrix3c build_spin1_bell() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix3c t;
  t << r, 0, r,        //
      0, -kI, 0,       //
      -r * kI, 0, r * kI;
  return t;
}

}  // namespace

const Matrix4c& bell_q_matrix() {
  static const Matrix4c q = build_bell_q();
  return q;
}

const Matrix3c& spin1_bell_matrix() {
  static const Matrix3c t = build_spin1_bell();
  return t;
}

const Matrix3c& spin1_jx() {
  static const Matrix3c j = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix3c m;
    m << 0, r, 0, r, 0, r, 0, r, 0;
    return m;
  }();
  return j;
}

const Matrix3c& spin1_jy() {
  static const Matrix3c j = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix3c m;
    m << 0, -r * kI, 0, r * kI, 0, -r * kI, 0, r * kI, 0;
    return m;
  }();
  return j;
}

const Matrix3c& spin1_jz() {
  static const Matrix3c j = [] {
    Matrix3c m = Matrix3c::Zero();
    m(0, 0) = 1.0;
    m(2, 2) = -1.0;
    return m;
  }();
  return j;
}

SymmetricGate make_gate(const Matrix3c& matrix, BasisTag basis) {
  const double residual = unitarity_residual(matrix);
  if (residual >= kUnitaryTol) throw NotUnitaryError(residual);
  return {matrix, basis};
}

SymmetricGate to_basis(const SymmetricGate& g, BasisTag target) {
  if (g.basis == target) return g;
  // Spin1 and CompSym share coordinates; only BellSym needs a conjugation.
  const bool from_bell = g.basis == BasisTag::BellSym;
  const bool to_bell = target == BasisTag::BellSym;
  if (!from_bell && !to_bell) return {g.matrix, target};

  const Matrix3c& t = spin1_bell_matrix();
  if (to_bell) return {t * g.matrix * t.adjoint(), target};
  return {t.adjoint() * g.matrix * t, target};
}

SymmetricGate su3_normalize(const SymmetricGate& g) {
  const Complex det = g.matrix.determinant();
  // Principal cube root: argument lands in (-pi/3, pi/3].
  const Complex root =
      std::polar(std::cbrt(std::abs(det)), canonical_phase(std::arg(det)) / 3.0);
  return {g.matrix / root, g.basis};
}

SymmetricGate gate_from_point(const GeometricPoint& c) {
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = std::polar(1.0, 0.5 * (c.c1 - c.c2 + c.c3));
  m(1, 1) = std::polar(1.0, 0.5 * (c.c1 + c.c2 - c.c3));
  m(2, 2) = std::polar(1.0, 0.5 * (-c.c1 + c.c2 + c.c3));
  return {m, BasisTag::BellSym};
}

TwoQubitGate embed_reducible(const SymmetricGate& g) {
  const Matrix3c u = to_basis(g, BasisTag::CompSym).matrix;
  const double r = 1.0 / std::sqrt(2.0);
  Matrix4c v;
  v << u(0, 0), r * u(0, 1), r * u(0, 1), u(0, 2),                            //
      r * u(1, 0), 0.5 * (u(1, 1) + 1.0), 0.5 * (u(1, 1) - 1.0), r * u(1, 2), //
      r * u(1, 0), 0.5 * (u(1, 1) - 1.0), 0.5 * (u(1, 1) + 1.0), r * u(1, 2), //
      u(2, 0), r * u(2, 1), r * u(2, 1), u(2, 2);
  return {v};
}

bool is_reducible(const TwoQubitGate& v, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_reducible: tol must be > 0");
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<Complex, 4, 3> sym;
  sym << 1, 0, 0, 0, r, 0, 0, r, 0, 0, 0, 1;
  Eigen::Vector4cd anti;
  anti << 0, r, -r, 0;

  const double off1 = (anti.adjoint() * v.matrix * sym).cwiseAbs().maxCoeff();
  const double off2 = (sym.adjoint() * v.matrix * anti).cwiseAbs().maxCoeff();
  return std::max(off1, off2) < tol;
}

SymmetricGate local_rotation(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("local_rotation: axis must be unit length");
  }
  const Matrix3c h =
      axis.x() * spin1_jx() + axis.y() * spin1_jy() + axis.z() * spin1_jz();
  const Matrix3c u = hermitian_expm(h, angle);
  return {u, BasisTag::Spin1};
}

SymmetricGate random_gate(std::uint64_t seed) {
  SphereSampler rng(seed);
  auto normal_pair = [&rng] {
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return std::pair{r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
  };

  Matrix3c a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto [re, im] = normal_pair();
      a(i, j) = Complex(re, im);
    }
  }

  Eigen::HouseholderQR<Matrix3c> qr(a);
  Matrix3c q = qr.householderQ();
  const Matrix3c r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the residual diagonal phase freedom so Q is Haar, not just unitary.
  for (int j = 0; j < 3; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return su3_normalize({q, BasisTag::BellSym});
}

}  // namespace symgate
