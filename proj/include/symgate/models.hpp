#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symgate/entangling.hpp"

namespace symgate {

struct HeisenbergParams {
  double ix;
  double iy;
  double iz;
};

struct LMGParams {
  double b;
  double g1;
  double g2;
};

struct CrossKerrParams {
  double omega_a;
  double omega_b;
  double g_ck;
};

enum class ModelKind { Heisenberg, Lmg, CrossKerr };

using ModelParams = std::variant<HeisenbergParams, LMGParams, CrossKerrParams>;

struct SweepRecord {
  double t;
  double ep;
  double abs_g;
  bool perfect;
  bool boundary;
};

// Diagonal Bell-basis evolution of the anisotropic two-spin exchange model;
// equals gate_from_point((ix*t, iy*t, iz*t)).
SymmetricGate heisenberg_gate(const HeisenbergParams& p, double t);

// (2/15)[sin^2((ix-iy)t) + sin^2((iy-iz)t) + sin^2((ix-iz)t)]
double heisenberg_ep(const HeisenbergParams& p, double t);

// B*Jz + g1*Jz^2 - g2*Jx^2 in the Spin1 basis (j = 1 block).
Matrix3c lmg_hamiltonian(const LMGParams& p);

// exp(-i H t), converted to the Bell basis and su3-normalized.
SymmetricGate lmg_gate(const LMGParams& p, double t);

// Closed-form |G| candidate for the lmg gate alongside the value from the
// generic m-matrix pipeline; the pipeline value is authoritative.
struct LmgAbsG {
  double closed_form;
  double pipeline;
  double discrepancy;
};

LmgAbsG lmg_abs_g_closed(const LMGParams& p, double t);

// Cross-Kerr dynamics in the two-excitation block: the lmg gate with
// B = omega_a - omega_b, g1 = -g_ck, g2 = 0.
SymmetricGate crosskerr_gate(const CrossKerrParams& p, double t);

// (4/15) sin^2(g_ck * t)
double crosskerr_ep(const CrossKerrParams& p, double t);

// Uniform inclusive time grid, each record through the generic pipeline
// (gate -> |G| -> ep -> classification).
std::vector<SweepRecord> sweep(ModelKind model, const ModelParams& params,
                               double t_start, double t_end, int n_steps);

struct ModelPreset {
  std::string name;
  ModelKind model;
  ModelParams params;
};

// Named parameter sets (omega = 1): fig6a Heisenberg ix=-iz=1, iy=0;
// fig6b lmg -2B/7 = g1/2 = g2/4 = 1; fig6c cross-Kerr B = g1/2 = 1.
const std::vector<ModelPreset>& model_presets();
std::optional<ModelPreset> preset_by_name(const std::string& name);

}  // namespace symgate
