#include "symgate/entangling.hpp"

#include <algorithm>
#include <cmath>

namespace symgate {

namespace {

const Complex kI{0.0, 1.0};

// Linear entropy below this is floating-point noise around an exactly
// separable output; flushing keeps identity-like gates at ep = 0 exactly.
constexpr double kEntropyFloor = 1e-14;

// P = -sigma_y x sigma_y
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

Eigen::Vector4cd separable_state(double theta, double phi) {
  const Complex u0{std::cos(theta / 2.0), 0.0};
  const Complex u1 = std::polar(std::sin(theta / 2.0), phi);
  Eigen::Vector4cd uu;
  uu << u0 * u0, u0 * u1, u1 * u0, u1 * u1;
  return uu;
}

// Evaluates the output linear entropy two independent ways per point:
// a generic partial trace of the embedded 4x4 state, and the closed
// Bell-coefficient route (state into Bell coordinates, 3x3 gate action,
// reduced purity from the symmetric amplitudes).
class EntropyEvaluator {
 public:
  explicit EntropyEvaluator(const SymmetricGate& g)
      : embedded_(embed_reducible(g).matrix),
        bell_(to_basis(g, BasisTag::BellSym).matrix) {}

  double entropy(double theta, double phi) const {
    const double generic = generic_route(theta, phi);
    const double closed = closed_route(theta, phi);
    if (std::abs(generic - closed) > 1e-10) {
      throw InternalMismatchError(
          "linear_entropy_after: partial-trace and closed-coefficient routes "
          "disagree");
    }
    double e = generic;
    if (e < kEntropyFloor) e = 0.0;
    if (e > 0.5 && e < 0.5 + 1e-12) e = 0.5;
    return e;
  }

  double concurrence(double theta, double phi) const {
    const Eigen::Vector4cd chi = embedded_ * separable_state(theta, phi);
    const Complex pairing = chi.transpose() * p_matrix() * chi;
    const double c = std::abs(pairing);
    return std::min(c, 1.0);
  }

 private:
  double generic_route(double theta, double phi) const {
    const Eigen::Vector4cd chi = embedded_ * separable_state(theta, phi);
    const double p = std::norm(chi[0]) + std::norm(chi[1]);
    const double r = std::norm(chi[2]) + std::norm(chi[3]);
    const Complex q = chi[0] * std::conj(chi[2]) + chi[1] * std::conj(chi[3]);
    return 1.0 - (p * p + r * r + 2.0 * std::norm(q));
  }

  double closed_route(double theta, double phi) const {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    // |u,u> in symmetric Bell coordinates, up to a global phase.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Vector3cd in;
    in << Complex(cp, -sp * ct), Complex(0.0, -st), Complex(-sp, -ct * cp);
    in *= inv_sqrt2;

    const Eigen::Vector3cd w = bell_ * in;
    const double sqrt2 = std::sqrt(2.0);
    const Complex a = sqrt2 * (w[0] + kI * w[2]);
    const Complex b = sqrt2 * kI * w[1];
    const Complex c = sqrt2 * (w[0] - kI * w[2]);

    const double ab = std::norm(a) + std::norm(b);
    const double bc = std::norm(b) + std::norm(c);
    const Complex cross = a * std::conj(b) + b * std::conj(c);
    return 1.0 - (ab * ab + bc * bc + 2.0 * std::norm(cross)) / 16.0;
  }

  Matrix4c embedded_;
  Matrix3c bell_;
};

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

bool in_perfect_region(const ChamberCoords& s, double tol) {
  return s.s1 >= 0.5 - tol && s.s2 <= 1.0 - s.s1 + tol;
}

// Signed distance from the chamber coordinates to the perfect-region
// boundary, on the same footing as the hull margin's sign.
double region_margin(const ChamberCoords& s) {
  return std::min(s.s1 - 0.5, (1.0 - s.s1) - s.s2);
}

EntanglerClass classify_phases(const EigenPhaseTriple& mu,
                               const ChamberCoords& s, double tol) {
  const double margin = hull_margin_from_phases(mu, tol);
  const bool perfect_hull = margin >= -tol;
  const bool perfect_region = in_perfect_region(s, tol);
  if (std::abs(margin) > 10.0 * tol &&
      std::abs(region_margin(s)) > 10.0 * tol &&
      perfect_hull != perfect_region) {
    throw ClassifierMismatchError(
        "classify: hull test and chamber-region test disagree");
  }
  return {perfect_hull, std::abs(margin) <= tol, margin};
}

}  // namespace

EpResult ep_closed_form(const GeometricPoint& c) {
  const double s12 = std::sin(c.c1 - c.c2);
  const double s23 = std::sin(c.c2 - c.c3);
  const double s31 = std::sin(c.c3 - c.c1);
  const double direct = (2.0 / 15.0) * (s12 * s12 + s23 * s23 + s31 * s31);
  const double via_invariant = 0.3 * (1.0 - abs_g_from_point(c));
  if (std::abs(direct - via_invariant) > 1e-10) {
    throw InternalMismatchError(
        "ep_closed_form: sine form and invariant form disagree");
  }
  return {direct, EpMethod::ClosedForm, 0, 0.0};
}

double linear_entropy_after(const SymmetricGate& g, double theta, double phi) {
  return EntropyEvaluator(g).entropy(theta, phi);
}

EpResult ep_monte_carlo(const SymmetricGate& g, std::size_t n,
                        std::uint64_t seed) {
  if (n < 100) throw std::invalid_argument("ep_monte_carlo: n must be >= 100");
  const EntropyEvaluator eval(g);
  SphereSampler sampler(seed);
  Kahan sum;
  Kahan sum_sq;
  for (std::size_t i = 0; i < n; ++i) {
    const SpherePoint p = sampler.next_point();
    const double e = eval.entropy(p.theta, p.phi);
    sum.add(e);
    sum_sq.add(e * e);
  }
  const double mean = sum.sum / static_cast<double>(n);
  const double var = std::max(
      0.0, (sum_sq.sum - static_cast<double>(n) * mean * mean) /
               static_cast<double>(n - 1));
  return {mean, EpMethod::MonteCarlo, n, std::sqrt(var / static_cast<double>(n))};
}

double concurrence_after(const SymmetricGate& g, double theta, double phi) {
  return EntropyEvaluator(g).concurrence(theta, phi);
}

double max_concurrence(const SymmetricGate& g) {
  const EntropyEvaluator eval(g);
  const int n_theta = 181;
  const int n_phi = 361;
  double best = -1.0;
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = i * kPi / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * kTwoPi / (n_phi - 1);
      const double c = eval.concurrence(theta, phi);
      if (c > best) {
        best = c;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  // One shrinking pattern-search pass around the grid winner.
  double h = kPi / (n_theta - 1);
  for (int iter = 0; iter < 52; ++iter) {
    bool moved = false;
    const double candidates[4][2] = {{best_theta + h, best_phi},
                                     {best_theta - h, best_phi},
                                     {best_theta, best_phi + h},
                                     {best_theta, best_phi - h}};
    for (const auto& cand : candidates) {
      const double theta = std::clamp(cand[0], 0.0, kPi);
      const double c = eval.concurrence(theta, cand[1]);
      if (c > best) {
        best = c;
        best_theta = theta;
        best_phi = cand[1];
        moved = true;
      }
    }
    if (!moved) h *= 0.5;
  }
  return best;
}

double hull_margin_from_phases(const EigenPhaseTriple& mu, double tol) {
  using Vec2 = Eigen::Vector2d;
  const std::array<Vec2, 3> p = {Vec2(std::cos(mu.mu1), std::sin(mu.mu1)),
                                 Vec2(std::cos(mu.mu2), std::sin(mu.mu2)),
                                 Vec2(std::cos(mu.mu3), std::sin(mu.mu3))};

  auto coincident = [&](int i, int j) { return (p[i] - p[j]).norm() <= tol; };
  auto segment_distance = [](const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    const double len2 = d.squaredNorm();
    if (len2 == 0.0) return a.norm();
    const double t = std::clamp(-a.dot(d) / len2, 0.0, 1.0);
    return (a + t * d).norm();
  };

  const bool c01 = coincident(0, 1);
  const bool c02 = coincident(0, 2);
  const bool c12 = coincident(1, 2);
  if (c01 && c02 && c12) return -1.0;  // point hull on the unit circle
  if (c01 || c02 || c12) {
    // Two distinct vertices: the hull is a chord. It contains the origin
    // iff the endpoints are antipodal, in which case the origin sits on it.
    const int i = c01 ? 0 : (c02 ? 0 : 1);
    const int j = c01 ? 2 : (c02 ? 1 : 0);
    if ((p[i] + p[j]).norm() <= tol) return 0.0;
    return -segment_distance(p[i], p[j]);
  }

  Vec2 a = p[0], b = p[1], c = p[2];
  const double area2 = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
  if (area2 < 0.0) std::swap(b, c);
  auto edge_margin = [](const Vec2& u, const Vec2& v) {
    // Signed distance of the origin from the directed edge u -> v (positive
    // on the interior side for CCW orientation). For vertices on the unit
    // circle the edge line meets the origin only inside the chord, so this
    // doubles as the distance to the hull boundary near zero.
    return (u.x() * v.y() - u.y() * v.x()) / (v - u).norm();
  };
  const double m1 = edge_margin(a, b);
  const double m2 = edge_margin(b, c);
  const double m3 = edge_margin(c, a);
  const double margin = std::min({m1, m2, m3});
  if (margin >= 0.0) return margin;
  // Outside: report the true distance to the triangle boundary.
  return -std::min({segment_distance(a, b), segment_distance(b, c),
                    segment_distance(c, a)});
}

EntanglerClass classify(const SymmetricGate& g, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classify: tol must be > 0");
  const EigenPhaseTriple mu = eigenphases_of_m(g);
  const GeometricPoint raw{0.5 * (mu.mu1 + mu.mu2), 0.5 * (mu.mu2 + mu.mu3),
                           0.5 * (mu.mu1 + mu.mu3)};
  return classify_phases(mu, weyl_reduce(raw).coords, tol);
}

EntanglerClass classify(const GeometricPoint& c, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classify: tol must be > 0");
  return classify_phases(phases_from_point(c), weyl_reduce(c).coords, tol);
}

double chamber_fraction_perfect(FractionMode mode, std::size_t n,
                                std::uint64_t seed) {
  if (mode == FractionMode::Analytic) {
    // Perfect region: 1/2 <= s1 <= 1, 0 <= s2 <= 1 - s1. Its area over the
    // area of the full triangle 0 <= s2 <= s1 <= 1.
    const double region = 0.5 * 0.5 * 0.5;  // integral of (1 - s1) over [1/2, 1]
    const double triangle = 0.5;
    return region / triangle;
  }
  if (n < 10000) {
    throw std::invalid_argument(
        "chamber_fraction_perfect: monte_carlo requires n >= 10^4");
  }
  SphereSampler sampler(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = sampler.next_double();
    const double v = sampler.next_double();
    const double s1 = std::max(u, v);
    const double s2 = std::min(u, v);
    const Eigen::Vector3d point = s1 * chamber_vx() + s2 * chamber_vy();
    if (classify(GeometricPoint::from(point)).is_perfect) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace symgate
