#pragma once

#include <functional>
#include <vector>

#include "dynalg/propagator.hpp"

namespace dynalg {

// Pluggable scattering backend so the same relation checks run against
// the free operations and the interaction-picture relative ones.
struct ScatteringProvider {
    std::function<WaveState(const WaveState&, const Functional&, const PropagatorConfig&)>
        scatter;
    std::function<WaveState(const WaveState&, const Functional&, const PropagatorConfig&)>
        scatter_inverse;
    std::function<Functional(const LoopPath&)> boundary;
};

ScatteringProvider free_provider();

// max over states of || S(F) psi - S(F^{x0} + boundary(x0)) psi ||.
double check_dynamical_relation(const ScatteringProvider& provider, const Functional& f,
                                const LoopPath& x0, const std::vector<WaveState>& states,
                                const PropagatorConfig& cfg);

// max over states of || S(F1+F2+F3) psi - S(F1+F3) S(F3)^{-1} S(F2+F3) psi ||
// with F1 supported after F2 (constants count as always ordered).
double check_causal_relation(const ScatteringProvider& provider, const Functional& f1,
                             const Functional& f2, const Functional& f3,
                             const std::vector<WaveState>& states,
                             const PropagatorConfig& cfg);

// Mean pairwise log2 slope of a (dt, value) series, dt descending.
double measured_order(const std::vector<std::pair<double, double>>& series);

} // namespace dynalg
