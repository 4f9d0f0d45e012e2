#pragma once

#include "symgate/invariants.hpp"

namespace symgate {

enum class EpMethod { ClosedForm, MonteCarlo };

struct EpResult {
  double ep;
  EpMethod method;
  std::size_t n_samples;  // 0 for closed form
  double std_error;       // 0 for closed form
};

struct EntanglerClass {
  bool is_perfect;
  bool on_boundary;
  double hull_margin;  // signed distance of the origin to the hull boundary
};

enum class FractionMode { Analytic, MonteCarlo };

// ep = (2/15)[sin^2(c1-c2) + sin^2(c2-c3) + sin^2(c3-c1)], cross-checked
// against (3/10)(1 - |G|); InternalMismatchError if the forms disagree
// beyond 1e-10.
EpResult ep_closed_form(const GeometricPoint& c);

// Linear entropy E = 1 - Tr(rho_1^2) of g applied to the separable symmetric
// state |u,u> at (theta, phi). Computed by a generic partial trace of the
// embedded 4x4 state and cross-checked against the closed Bell-coefficient
// form within 1e-10. Values below the floating-point noise floor flush to 0.
double linear_entropy_after(const SymmetricGate& g, double theta, double phi);

// Mean of linear_entropy_after over n uniform sphere samples; deterministic
// per seed (compensated summation, fixed order). Requires n >= 100.
EpResult ep_monte_carlo(const SymmetricGate& g, std::size_t n,
                        std::uint64_t seed);

// Concurrence |chi^T P chi| of the embedded output state, P = -sigma_y x sigma_y.
double concurrence_after(const SymmetricGate& g, double theta, double phi);

// Grid max of concurrence_after over a 181x361 (theta, phi) grid plus one
// deterministic pattern-search refinement pass.
double max_concurrence(const SymmetricGate& g);

// Signed distance from the origin to the convex hull of the three unit-circle
// points e^{i mu_k}: positive inside, negative outside, zero on the boundary.
// A degenerate two-point hull contains the origin iff the points are
// antipodal within tol.
double hull_margin_from_phases(const EigenPhaseTriple& mu, double tol = 1e-9);

// Perfect-entangler classification. Runs both the origin-in-hull test and the
// chamber-region inequality and throws ClassifierMismatchError if they
// disagree away from the boundary. The origin on the hull boundary counts as
// perfect.
EntanglerClass classify(const SymmetricGate& g, double tol = 1e-9);
EntanglerClass classify(const GeometricPoint& c, double tol = 1e-9);

// Fraction of the chamber triangle occupied by perfect entanglers.
// Analytic mode integrates the region bounds exactly; MonteCarlo samples
// (s1, s2) uniformly on the triangle (n >= 10^4) and classifies each.
double chamber_fraction_perfect(FractionMode mode, std::size_t n = 0,
                                std::uint64_t seed = 0);

}  // namespace symgate
