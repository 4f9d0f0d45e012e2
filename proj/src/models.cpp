#include "symgate/models.hpp"

#include <cmath>

namespace symgate {

SymmetricGate heisenberg_gate(const HeisenbergParams& p, double t) {
  return gate_from_point({p.ix * t, p.iy * t, p.iz * t});
}

double heisenberg_ep(const HeisenbergParams& p, double t) {
  const double sxy = std::sin((p.ix - p.iy) * t);
  const double syz = std::sin((p.iy - p.iz) * t);
  const double sxz = std::sin((p.ix - p.iz) * t);
  return (2.0 / 15.0) * (sxy * sxy + syz * syz + sxz * sxz);
}

Matrix3c lmg_hamiltonian(const LMGParams& p) {
  Matrix3c h = Matrix3c::Zero();
  h(0, 0) = p.b + p.g1 - 0.5 * p.g2;
  h(0, 2) = -0.5 * p.g2;
  h(1, 1) = -p.g2;
  h(2, 0) = -0.5 * p.g2;
  h(2, 2) = -p.b + p.g1 - 0.5 * p.g2;
  return h;
}

SymmetricGate lmg_gate(const LMGParams& p, double t) {
  const Matrix3c u = hermitian_expm(lmg_hamiltonian(p), t);
  return su3_normalize(to_basis({u, BasisTag::Spin1}, BasisTag::BellSym));
}

LmgAbsG lmg_abs_g_closed(const LMGParams& p, double t) {
  const double r = std::sqrt(p.b * p.b + 0.25 * p.g2 * p.g2);
  double g1_factor = 1.0;
  if (r > 0.0) {
    const double s = std::sin(r * t);
    g1_factor = 1.0 - p.g2 * p.g2 * s * s / (2.0 * r);
  }
  const double closed =
      (1.0 + 4.0 * g1_factor * std::cos(2.0 * (p.g1 + 0.5 * p.g2) * t) +
       4.0 * g1_factor * g1_factor) /
      9.0;
  const double pipeline = invariant_G(lmg_gate(p, t)).abs_g;
  return {closed, pipeline, std::abs(closed - pipeline)};
}

SymmetricGate crosskerr_gate(const CrossKerrParams& p, double t) {
  return lmg_gate({p.omega_a - p.omega_b, -p.g_ck, 0.0}, t);
}

double crosskerr_ep(const CrossKerrParams& p, double t) {
  const double s = std::sin(p.g_ck * t);
  return (4.0 / 15.0) * s * s;
}

std::vector<SweepRecord> sweep(ModelKind model, const ModelParams& params,
                               double t_start, double t_end, int n_steps) {
  if (!(t_end > t_start)) {
    throw std::invalid_argument("sweep: t_end must be > t_start");
  }
  if (n_steps < 2) throw std::invalid_argument("sweep: n_steps must be >= 2");

  auto gate_at = [&](double t) -> SymmetricGate {
    switch (model) {
      case ModelKind::Heisenberg:
        return heisenberg_gate(std::get<HeisenbergParams>(params), t);
      case ModelKind::Lmg:
        return lmg_gate(std::get<LMGParams>(params), t);
      case ModelKind::CrossKerr:
        return crosskerr_gate(std::get<CrossKerrParams>(params), t);
    }
    throw std::invalid_argument("sweep: unknown model");
  };

  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(n_steps));
  const double dt = (t_end - t_start) / (n_steps - 1);
  for (int i = 0; i < n_steps; ++i) {
    const double t = t_start + i * dt;
    const SymmetricGate gate = gate_at(t);
    const double abs_g = invariant_G(gate).abs_g;
    const EntanglerClass cls = classify(gate);
    records.push_back(
        {t, 0.3 * (1.0 - abs_g), abs_g, cls.is_perfect, cls.on_boundary});
  }
  return records;
}

const std::vector<ModelPreset>& model_presets() {
  static const std::vector<ModelPreset> presets = {
      {"fig6a", ModelKind::Heisenberg, HeisenbergParams{1.0, 0.0, -1.0}},
      {"fig6b", ModelKind::Lmg, LMGParams{-3.5, 2.0, 4.0}},
      {"fig6c", ModelKind::CrossKerr, CrossKerrParams{1.0, 0.0, -2.0}},
  };
  return presets;
}

std::optional<ModelPreset> preset_by_name(const std::string& name) {
  for (const ModelPreset& p : model_presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace symgate
