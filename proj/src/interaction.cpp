#include "dynalg/interaction.hpp"

#include <cmath>

#include "dynalg/errors.hpp"

namespace dynalg {

InteractionSpec make_interaction(PotentialShape shape, double core_lo, double core_hi,
                                 double ramp) {
    if (!(core_hi > core_lo)) throw ConfigError("make_interaction: empty core interval");
    if (ramp < 0.0) throw ConfigError("make_interaction: negative ramp");
    InteractionSpec spec;
    spec.shape = std::move(shape);
    spec.core_lo = core_lo;
    spec.core_hi = core_hi;
    std::vector<PiecewisePoly::Piece> pieces;
    if (ramp > 0.0) {
        // Cubic smoothstep 3u^2 - 2u^3 in the ramp-local variable.
        const double r = ramp;
        pieces.push_back({core_lo - r, core_lo, {0.0, 0.0, 3.0 / (r * r), -2.0 / (r * r * r)}});
        pieces.push_back({core_lo, core_hi, {1.0}});
        pieces.push_back({core_hi, core_hi + r, {1.0, 0.0, -3.0 / (r * r), 2.0 / (r * r * r)}});
    } else {
        pieces.push_back({core_lo, core_hi, {1.0}});
    }
    spec.chi = PiecewisePoly(std::move(pieces));
    return spec;
}

Functional chi_functional(const InteractionSpec& spec) {
    Functional f;
    f.dim = 1;
    f.density.assign(1, PiecewisePoly{});
    if (!spec.chi.is_zero()) {
        PotentialTerm term;
        term.window = spec.chi;
        term.shape = spec.shape;
        f.potentials.push_back(std::move(term));
    }
    validate_functional(f);
    return f;
}

namespace {

Functional minus_chi(const InteractionSpec& spec) {
    Functional f = chi_functional(spec);
    for (auto& t : f.potentials) t.window = t.window.scaled(-1.0);
    return f;
}

} // namespace

WaveState relative_scattering(const WaveState& in, const Functional& f,
                              const InteractionSpec& spec, const PropagatorConfig& cfg) {
    const Functional mc = minus_chi(spec);
    WaveState s = scattering(in, add(f, mc), cfg);
    return scattering_inverse(s, mc, cfg);
}

WaveState relative_scattering_inverse(const WaveState& in, const Functional& f,
                                      const InteractionSpec& spec,
                                      const PropagatorConfig& cfg) {
    const Functional mc = minus_chi(spec);
    WaveState s = scattering(in, mc, cfg);
    return scattering_inverse(s, add(f, mc), cfg);
}

Functional interacting_boundary_action(const LoopPath& x0, const InteractionSpec& spec) {
    Functional out = boundary_action(x0);
    if (spec.chi.is_zero() || x0.is_zero()) return out;
    PotentialTerm plus;
    plus.window = spec.chi;
    plus.shape = spec.shape;
    PotentialTerm minus;
    minus.window = spec.chi.scaled(-1.0);
    minus.shape = spec.shape;
    minus.shift = x0;
    out.potentials.push_back(std::move(plus));
    out.potentials.push_back(std::move(minus));
    return out;
}

ScatteringProvider interacting_provider(const InteractionSpec& spec) {
    ScatteringProvider p;
    p.scatter = [spec](const WaveState& s, const Functional& f, const PropagatorConfig& cfg) {
        return relative_scattering(s, f, spec, cfg);
    };
    p.scatter_inverse = [spec](const WaveState& s, const Functional& f,
                               const PropagatorConfig& cfg) {
        return relative_scattering_inverse(s, f, spec, cfg);
    };
    p.boundary = [spec](const LoopPath& x0) { return interacting_boundary_action(x0, spec); };
    return p;
}

InteractionRelationReport verify_interacting_relations(
    const InteractionSpec& spec, const Functional& f, const LoopPath& x0,
    const Functional& f1, const Functional& f2, const Functional& f3,
    const std::vector<WaveState>& states, const PropagatorConfig& base_cfg,
    const std::vector<double>& dts) {
    const ScatteringProvider provider = interacting_provider(spec);
    InteractionRelationReport rep;
    for (double dt : dts) {
        PropagatorConfig cfg = base_cfg;
        cfg.dt = dt;
        rep.dynamical.emplace_back(dt, check_dynamical_relation(provider, f, x0, states, cfg));
        rep.causal.emplace_back(dt, check_causal_relation(provider, f1, f2, f3, states, cfg));
    }
    rep.dynamical_order = measured_order(rep.dynamical);
    rep.causal_order = measured_order(rep.causal);
    return rep;
}

} // namespace dynalg
