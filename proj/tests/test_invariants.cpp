#include <cmath>

#include <doctest.h>

#include "symgate/invariants.hpp"
#include "test_helpers.hpp"

using namespace symgate;
using test::max_abs_diff;

namespace {

Eigen::Matrix3d c6_rotation() {
  // Rotation by pi/3 about (1,1,1)/sqrt(3), Rodrigues form.
  const Eigen::Vector3d n = Eigen::Vector3d(1, 1, 1).normalized();
  const double ct = std::cos(kPi / 3.0);
  const double st = std::sin(kPi / 3.0);
  Eigen::Matrix3d cross;
  cross << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
  return ct * Eigen::Matrix3d::Identity() + st * cross +
         (1.0 - ct) * n * n.transpose();
}

GeometricPoint apply(const Eigen::Matrix3d& m, const GeometricPoint& c) {
  return GeometricPoint::from(m * c.vec());
}

}  // namespace

TEST_CASE("root geometry: reflections are orthogonal involutions, vx | vy") {
  for (const auto& dirs : {root_directions(), bisector_directions()}) {
    for (const auto& d : dirs) {
      const Eigen::Matrix3d s = reflection_matrix(d);
      CHECK(max_abs_diff(s * s.transpose(), Eigen::Matrix3d::Identity()) <
            1e-12);
      CHECK(max_abs_diff(s, s.transpose()) < 1e-12);
      CHECK(max_abs_diff(s * s, Eigen::Matrix3d::Identity()) < 1e-12);
    }
  }
  CHECK(std::abs(chamber_vx().dot(chamber_vy())) < 1e-12);
  CHECK(max_abs_diff(chamber_vx(), 0.5 * (root_alpha1() + root_alpha2())) <
        1e-12);
  CHECK(max_abs_diff(chamber_vy(), (root_alpha1() - root_alpha2()) / 6.0) <
        1e-12);
}

TEST_CASE("m_matrix: identity, diagonal squares, rotations") {
  const SymmetricGate id{Matrix3c::Identity(), BasisTag::BellSym};
  CHECK(max_abs_diff(m_matrix(id), Matrix3c::Identity()) < 1e-14);

  test::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const GeometricPoint c = rng.oplane_point();
    const Matrix3c m = m_matrix(gate_from_point(c));
    Matrix3c expect = Matrix3c::Zero();
    expect(0, 0) = std::polar(1.0, c.c1 - c.c2 + c.c3);
    expect(1, 1) = std::polar(1.0, c.c1 + c.c2 - c.c3);
    expect(2, 2) = std::polar(1.0, -c.c1 + c.c2 + c.c3);
    CHECK(max_abs_diff(m, expect) < 1e-12);
    CHECK(max_abs_diff(m, m.transpose()) < 1e-10);
    CHECK(unitarity_residual(m) < 1e-10);
  }

  for (int i = 0; i < 20; ++i) {
    CHECK(max_abs_diff(m_matrix(rng.rotation()), Matrix3c::Identity()) <
          1e-10);
  }
}

TEST_CASE("invariant_G at the named points") {
  const SymmetricGate id{Matrix3c::Identity(), BasisTag::BellSym};
  CHECK(std::abs(invariant_G(id).g - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(invariant_G(id).abs_g - 1.0) < 1e-12);

  CHECK(std::abs(invariant_G(gate_from_point({0, kPi / 2, kPi / 2})).abs_g -
                 1.0 / 9.0) < 1e-12);
  CHECK(invariant_G(gate_from_point({-kPi / 3, 0, kPi / 3})).abs_g < 1e-12);
}

TEST_CASE("abs_g_from_point matches the m-matrix pipeline") {
  CHECK(abs_g_from_point({0, 0, 0}) == 1.0);
  CHECK(std::abs(abs_g_from_point({0, kPi / 2, kPi / 2}) - 1.0 / 9.0) < 1e-15);

  test::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const GeometricPoint c = rng.point();
    CHECK(std::abs(abs_g_from_point(c) -
                   invariant_G(gate_from_point(c)).abs_g) < 1e-10);
  }
}

TEST_CASE("eigenphases_of_m on diagonal gates") {
  const SymmetricGate id{Matrix3c::Identity(), BasisTag::BellSym};
  const EigenPhaseTriple zero = eigenphases_of_m(id);
  CHECK(std::abs(zero.mu1) < 1e-12);
  CHECK(std::abs(zero.mu2) < 1e-12);
  CHECK(std::abs(zero.mu3) < 1e-12);

  // (0, pi/2, pi/2) has det i; after the internal su3 normalization the raw
  // squared phases {0, 0, pi} shift by -pi/3 each.
  const EigenPhaseTriple b = eigenphases_of_m(gate_from_point({0, kPi / 2, kPi / 2}));
  CHECK(std::abs(b.mu1 + kPi / 3.0) < 1e-10);
  CHECK(std::abs(b.mu2 + kPi / 3.0) < 1e-10);
  CHECK(std::abs(b.mu3 - 2.0 * kPi / 3.0) < 1e-10);

  const EigenPhaseTriple c = eigenphases_of_m(gate_from_point({-kPi / 3, kPi / 3, 0}));
  CHECK(std::abs(c.mu1 + 2.0 * kPi / 3.0) < 1e-10);
  CHECK(std::abs(c.mu2) < 1e-10);
  CHECK(std::abs(c.mu3 - 2.0 * kPi / 3.0) < 1e-10);

  // Product of the eigenvalues is 1 for the normalized m.
  test::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const EigenPhaseTriple mu = eigenphases_of_m(random_gate(6000 + i));
    CHECK(std::abs(canonical_phase(mu.mu1 + mu.mu2 + mu.mu3)) < 1e-9);
  }
}

TEST_CASE("weyl_reduce: named reductions") {
  const WeylReduction origin = weyl_reduce({0, 0, 0});
  CHECK(origin.coords.s1 == 0.0);
  CHECK(origin.coords.s2 == 0.0);
  CHECK(origin.point.vec().norm() < 1e-15);

  const WeylReduction max_ep = weyl_reduce({-kPi / 3, 0, kPi / 3});
  CHECK(std::abs(max_ep.coords.s1 - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(max_ep.coords.s2) < 1e-12);

  // The boundary class has two chamber images, the wall point (1/2, 1/2)
  // and the corner (1, 0); the smaller-s2 tie-break picks the corner.
  const WeylReduction boundary = weyl_reduce({0, kPi / 2, kPi / 2});
  CHECK(std::abs(boundary.coords.s1 - 1.0) < 1e-12);
  CHECK(std::abs(boundary.coords.s2) < 1e-12);
}

TEST_CASE("weyl_reduce: lattice periodicity and idempotence") {
  test::Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const GeometricPoint c = rng.point();
    const WeylReduction base = weyl_reduce(c);

    for (const Eigen::Vector3d& alpha : {root_alpha1(), root_alpha2()}) {
      const WeylReduction shifted =
          weyl_reduce(GeometricPoint::from(c.vec() + alpha));
      CHECK(std::abs(shifted.coords.s1 - base.coords.s1) < 1e-12);
      CHECK(std::abs(shifted.coords.s2 - base.coords.s2) < 1e-12);
    }

    const WeylReduction again = weyl_reduce(base.point);
    CHECK(std::abs(again.coords.s1 - base.coords.s1) < 1e-12);
    CHECK(std::abs(again.coords.s2 - base.coords.s2) < 1e-12);
    CHECK((again.point.vec() - base.point.vec()).norm() < 1e-12);

    CHECK(base.coords.s2 >= 0.0);
    CHECK(base.coords.s2 <= base.coords.s1);
    CHECK(base.coords.s1 <= 1.0);
    // The reduced point carries the invariant of the input.
    CHECK(std::abs(abs_g_from_point(base.point) - abs_g_from_point(c)) <
          1e-12);
  }
}

TEST_CASE("point_from_gate: canonical representatives") {
  const SymmetricGate id{Matrix3c::Identity(), BasisTag::BellSym};
  CHECK(point_from_gate(id).vec().norm() < 1e-9);

  const GeometricPoint swap_like =
      point_from_gate(gate_from_point({0, kPi / 2, kPi / 2}));
  CHECK(std::abs(0.3 * (1.0 - abs_g_from_point(swap_like)) - 4.0 / 15.0) <
        1e-10);

  test::Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const GeometricPoint c = rng.point();
    const SymmetricGate a = gate_from_point(c);
    const SymmetricGate dressed =
        test::compose(test::compose(rng.rotation(), a), rng.rotation());
    const GeometricPoint canon = point_from_gate(dressed);
    const WeylReduction expect = weyl_reduce(c);
    CHECK((canon.vec() - expect.point.vec()).norm() < 1e-8);
    CHECK(std::abs(abs_g_from_point(canon) - invariant_G(dressed).abs_g) <
          1e-9);
  }
}

TEST_CASE("local invariance of G under spin-1 conjugation, 200 draws") {
  test::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const SymmetricGate g = random_gate(7000 + i);
    const SymmetricGate dressed =
        test::compose(test::compose(rng.rotation(), g), rng.rotation());
    CHECK(std::abs(invariant_G(dressed).abs_g - invariant_G(g).abs_g) < 1e-9);
    CHECK(std::abs(invariant_G(dressed).g - invariant_G(g).g) < 1e-9);
  }
}

TEST_CASE("Weyl reflections preserve |G|; bisector reflections conjugate Tr m") {
  test::Rng rng(47);
  for (int i = 0; i < 1000; ++i) {
    const GeometricPoint c = rng.oplane_point();
    for (const auto& root : root_directions()) {
      const GeometricPoint rc = apply(reflection_matrix(root), c);
      CHECK(std::abs(abs_g_from_point(rc) - abs_g_from_point(c)) < 1e-12);
    }
    for (const auto& bis : bisector_directions()) {
      const GeometricPoint bc = apply(reflection_matrix(bis), c);
      CHECK(std::abs(trace_m_from_point(bc) -
                     std::conj(trace_m_from_point(c))) < 1e-12);
    }
  }
}

TEST_CASE("ep field has the hexagonal C6 symmetry about (1,1,1)") {
  const Eigen::Matrix3d r6 = c6_rotation();
  test::Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const GeometricPoint c = rng.oplane_point();
    const double ep = 0.3 * (1.0 - abs_g_from_point(c));
    const double ep_rot = 0.3 * (1.0 - abs_g_from_point(apply(r6, c)));
    CHECK(std::abs(ep - ep_rot) < 1e-12);
  }
}

TEST_CASE("oplane_grid: shape, origin record, max ep, perfect fraction") {
  CHECK_THROWS_AS(oplane_grid(1), std::invalid_argument);

  const auto small = oplane_grid(3);
  CHECK(small.size() == 9);
  CHECK(small[0].arg_tr_m == 0.0);
  CHECK(small[0].ep == 0.0);
  CHECK_FALSE(small[0].perfect);

  const auto grid = oplane_grid(201);
  double max_ep = 0.0;
  std::size_t perfect_rows = 0;
  for (const auto& rec : grid) {
    max_ep = std::max(max_ep, rec.ep);
    if (rec.perfect) ++perfect_rows;
  }
  CHECK(std::abs(max_ep - 0.3) < 1e-12);
  // Perfect entanglers cover one fourth of the cell, up to rasterization.
  const double fraction =
      static_cast<double>(perfect_rows) / static_cast<double>(grid.size());
  CHECK(std::abs(fraction - 0.25) < 0.01);
}
