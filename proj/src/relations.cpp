#include "dynalg/relations.hpp"

#include <cmath>

#include "dynalg/errors.hpp"

namespace dynalg {

ScatteringProvider free_provider() {
    ScatteringProvider p;
    p.scatter = [](const WaveState& s, const Functional& f, const PropagatorConfig& cfg) {
        return scattering(s, f, cfg);
    };
    p.scatter_inverse = [](const WaveState& s, const Functional& f,
                           const PropagatorConfig& cfg) {
        return scattering_inverse(s, f, cfg);
    };
    p.boundary = [](const LoopPath& x0) { return boundary_action(x0); };
    return p;
}

double check_dynamical_relation(const ScatteringProvider& provider, const Functional& f,
                                const LoopPath& x0, const std::vector<WaveState>& states,
                                const PropagatorConfig& cfg) {
    const Functional deformed = add(shift_by_loop(f, x0), provider.boundary(x0));
    double worst = 0.0;
    for (const auto& psi : states) {
        const WaveState lhs = provider.scatter(psi, f, cfg);
        const WaveState rhs = provider.scatter(psi, deformed, cfg);
        worst = std::max(worst, distance(lhs, rhs));
    }
    return worst;
}

namespace {

bool ordered_after(const Functional& later, const Functional& earlier) {
    const auto sl = later.support();
    const auto se = earlier.support();
    if (!sl || !se) return true; // constants sit in the center
    return sl->first >= se->second;
}

} // namespace

double check_causal_relation(const ScatteringProvider& provider, const Functional& f1,
                             const Functional& f2, const Functional& f3,
                             const std::vector<WaveState>& states,
                             const PropagatorConfig& cfg) {
    if (!ordered_after(f1, f2))
        throw OrderingViolation("check_causal_relation: F1 must be supported after F2");
    const Functional sum12 = add(f1, f2);
    const Functional total = add(sum12, f3);
    const Functional f13 = add(f1, f3);
    const Functional f23 = add(f2, f3);
    double worst = 0.0;
    for (const auto& psi : states) {
        const WaveState lhs = provider.scatter(psi, total, cfg);
        WaveState rhs = provider.scatter(psi, f23, cfg);
        rhs = provider.scatter_inverse(rhs, f3, cfg);
        rhs = provider.scatter(rhs, f13, cfg);
        worst = std::max(worst, distance(lhs, rhs));
    }
    return worst;
}

double measured_order(const std::vector<std::pair<double, double>>& series) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        const double ratio_dt = series[i].first / series[i + 1].first;
        if (series[i + 1].second <= 0.0 || series[i].second <= 0.0) continue;
        sum += std::log2(series[i].second / series[i + 1].second) / std::log2(ratio_dt);
        ++count;
    }
    return count ? sum / count : 0.0;
}

} // namespace dynalg
