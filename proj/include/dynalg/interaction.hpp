#pragma once

#include "dynalg/relations.hpp"

namespace dynalg {

// Interaction potential with a compactly supported time cutoff chi that
// equals 1 on a designated core interval.
struct InteractionSpec {
    PotentialShape shape;
    PiecewisePoly chi;
    double core_lo = 0.0;
    double core_hi = 0.0;
};

// chi ramps up over [core_lo - ramp, core_lo) with a cubic smoothstep,
// holds 1 on the core, and ramps down symmetrically; ramp = 0 gives the
// sharp indicator.
InteractionSpec make_interaction(PotentialShape shape, double core_lo, double core_hi,
                                 double ramp);

// The functional chi V_I (single potential term, no constant).
Functional chi_functional(const InteractionSpec& spec);

// S_{L_chi}(F) = S(-chi V_I)^{-1} S(F - chi V_I).
WaveState relative_scattering(const WaveState& in, const Functional& f,
                              const InteractionSpec& spec, const PropagatorConfig& cfg);
WaveState relative_scattering_inverse(const WaveState& in, const Functional& f,
                                      const InteractionSpec& spec,
                                      const PropagatorConfig& cfg);

// Lagrangean shift of the cutoff theory:
// boundary_action(x0) + chi V_I - (chi V_I)^{x0}.
Functional interacting_boundary_action(const LoopPath& x0, const InteractionSpec& spec);

// Relation checks routed through the relative operations.
ScatteringProvider interacting_provider(const InteractionSpec& spec);

struct InteractionRelationReport {
    std::vector<std::pair<double, double>> dynamical;  // (dt, residual)
    std::vector<std::pair<double, double>> causal;     // (dt, residual)
    double dynamical_order = 0.0;
    double causal_order = 0.0;
};

// Runs both defining relations for the cutoff theory over a dt series.
InteractionRelationReport verify_interacting_relations(
    const InteractionSpec& spec, const Functional& f, const LoopPath& x0,
    const Functional& f1, const Functional& f2, const Functional& f3,
    const std::vector<WaveState>& states, const PropagatorConfig& base_cfg,
    const std::vector<double>& dts);

} // namespace dynalg
