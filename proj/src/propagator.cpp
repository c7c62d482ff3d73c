#include "dynalg/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dynalg/errors.hpp"
#include "dynalg/quadrature.hpp"

namespace dynalg {

using kernels::cplx;
using detail::Coeffs;

PropagatorConfig make_window(double support_lo, double support_hi, double dt, Scheme scheme,
                             SignConvention sign, double pad) {
    PropagatorConfig cfg;
    cfg.dt = dt;
    cfg.scheme = scheme;
    cfg.sign = sign;
    cfg.t_i = support_lo - pad;
    const long n = std::lround(std::ceil((support_hi + pad - cfg.t_i) / dt - 1e-9));
    cfg.t_f = cfg.t_i + std::max(1L, n) * dt;
    return cfg;
}

WaveState coherent_state(std::shared_ptr<const Grid> grid, double x_center, double p_center,
                         double width) {
    if (!(width > 0.0)) throw std::invalid_argument("coherent_state: width must be positive");
    const double b0 = grid->x_min(), b1 = grid->x_min() + grid->length();
    const double tail = std::max(std::exp(-(b0 - x_center) * (b0 - x_center) / (4 * width * width)),
                                 std::exp(-(b1 - x_center) * (b1 - x_center) / (4 * width * width)));
    if (tail > 1e-14) throw TailOverflow("coherent_state: position tail reaches the boundary");
    const double k_max = std::numbers::pi * grid->n() / grid->length();
    const double ktail = std::exp(-(k_max - std::abs(p_center)) * (k_max - std::abs(p_center)) *
                                  width * width);
    if (!(std::abs(p_center) < k_max) || ktail > 1e-14)
        throw TailOverflow("coherent_state: momentum tail reaches the band edge");

    WaveState s;
    s.grid = std::move(grid);
    s.amp.resize(s.grid->n());
    for (int j = 0; j < s.grid->n(); ++j) {
        const double x = s.grid->xs()[j];
        const double g = std::exp(-(x - x_center) * (x - x_center) / (4 * width * width));
        s.amp[j] = g * cplx(std::cos(p_center * x), std::sin(p_center * x));
    }
    const double nrm = s.norm(kernels::Exec::Serial);
    for (auto& a : s.amp) a /= nrm;
    return s;
}

WaveState free_evolve(const WaveState& in, double t, kernels::Exec exec) {
    WaveState out = in;
    if (t == 0.0) return out;
    kernels::fft(in.grid->plan(), out.amp.data(), false, exec);
    const auto& ks = in.grid->ks();
    std::vector<cplx> m(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const double ph = -0.5 * ks[j] * ks[j] * t;
        m[j] = cplx(std::cos(ph), std::sin(ph));
    }
    kernels::pointwise_mul(out.amp.data(), m.data(), m.size(), exec);
    kernels::fft(in.grid->plan(), out.amp.data(), true, exec);
    return out;
}

WaveState weyl_apply(const WaveState& in, double a, double b, double theta,
                     double tail_threshold, kernels::Exec exec) {
    WaveState out = in;
    const int n = in.grid->n();
    if (b != 0.0) {
        kernels::fft(in.grid->plan(), out.amp.data(), false, exec);
        std::vector<cplx> m(n);
        for (int j = 0; j < n; ++j) {
            const double ph = in.grid->ks()[j] * b;
            m[j] = cplx(std::cos(ph), std::sin(ph));
        }
        kernels::pointwise_mul(out.amp.data(), m.data(), m.size(), exec);
        kernels::fft(in.grid->plan(), out.amp.data(), true, exec);
    }
    std::vector<double> phase(n);
    for (int j = 0; j < n; ++j) phase[j] = theta + 0.5 * a * b + a * in.grid->xs()[j];
    kernels::apply_phase(out.amp.data(), phase.data(), 1.0, phase.size(), exec);
    if (std::max(std::abs(out.amp.front()), std::abs(out.amp.back())) > tail_threshold)
        throw TailOverflow("weyl_apply: translated state reaches the boundary");
    return out;
}

namespace {

// Per-evolve cache of everything needed to turn a time slice [t0, t1]
// into a position-space kick phase ∫ V_s(x) ds.
class KickPlan {
public:
    KickPlan(const Functional& f, const Grid& grid) : grid_(grid) {
        if (!f.density.empty() && !f.density[0].is_zero()) {
            linear_ = CumulativeIntegral(f.density[0]);
            has_linear_ = true;
        }
        for (const auto& term : f.potentials) {
            if (term.window.is_zero()) continue;
            const bool shifted = term.shift && !term.shift->is_zero();
            if (!shifted) {
                StaticTerm st;
                st.weight = CumulativeIntegral(term.window);
                st.values.resize(grid.n());
                for (int j = 0; j < grid.n(); ++j)
                    st.values[j] = shape_value(term.shape, grid.xs()[j]);
                statics_.push_back(std::move(st));
            } else if (const auto* poly = std::get_if<PolynomialShape>(&term.shape)) {
                shifted_polys_.push_back(build_shifted_poly(*poly, term));
                need_powers_ = std::max<std::size_t>(need_powers_, poly->coeffs.size());
            } else {
                ShiftedGauss sg;
                sg.gauss = std::get<GaussianShape>(term.shape);
                sg.window = term.window;
                sg.loop = term.shift->components()[0];
                sg.cuts = sg.window.breakpoints();
                for (double c : sg.loop.breakpoints()) sg.cuts.push_back(c);
                std::sort(sg.cuts.begin(), sg.cuts.end());
                sg.cuts.erase(std::unique(sg.cuts.begin(), sg.cuts.end()), sg.cuts.end());
                shifted_gauss_.push_back(std::move(sg));
            }
        }
        if (need_powers_ > 1) {
            xpow_.assign(need_powers_ - 1, std::vector<double>(grid.n()));
            for (int j = 0; j < grid.n(); ++j) {
                double p = 1.0;
                for (std::size_t m = 1; m < need_powers_; ++m) {
                    p *= grid.xs()[j];
                    xpow_[m - 1][j] = p;
                }
            }
        }
    }

    bool empty() const {
        return !has_linear_ && statics_.empty() && shifted_polys_.empty() &&
               shifted_gauss_.empty();
    }

    // phi[j] += ∫_{t0}^{t1} V_s(x_j) ds
    void accumulate(double t0, double t1, std::vector<double>& phi) const {
        if (has_linear_) {
            const double w = linear_(t1) - linear_(t0);
            if (w != 0.0)
                for (int j = 0; j < grid_.n(); ++j) phi[j] += w * grid_.xs()[j];
        }
        for (const auto& st : statics_) {
            const double w = st.weight(t1) - st.weight(t0);
            if (w != 0.0)
                for (int j = 0; j < grid_.n(); ++j) phi[j] += w * st.values[j];
        }
        for (const auto& sp : shifted_polys_) {
            for (std::size_t m = 0; m < sp.weights.size(); ++m) {
                const double w = sp.weights[m](t1) - sp.weights[m](t0);
                if (w == 0.0) continue;
                if (m == 0)
                    for (int j = 0; j < grid_.n(); ++j) phi[j] += w;
                else
                    for (int j = 0; j < grid_.n(); ++j) phi[j] += w * xpow_[m - 1][j];
            }
        }
        for (const auto& sg : shifted_gauss_) accumulate_gauss(sg, t0, t1, phi);
    }

private:
    struct StaticTerm {
        CumulativeIntegral weight;
        std::vector<double> values;
    };
    struct ShiftedPoly {
        // weights[m](t) = ∫ window(s) * c_m(x0(s)) ds where the shifted
        // shape expands as sum_m c_m(x0) x^m.
        std::vector<CumulativeIntegral> weights;
    };
    struct ShiftedGauss {
        GaussianShape gauss;
        PiecewisePoly window;
        PiecewisePoly loop;
        std::vector<double> cuts;
    };

    ShiftedPoly build_shifted_poly(const PolynomialShape& poly, const PotentialTerm& term) {
        const Coeffs& c = poly.coeffs;
        const std::size_t deg = c.size();
        const PiecewisePoly& x0 = term.shift->components()[0];
        ShiftedPoly sp;
        for (std::size_t m = 0; m < deg; ++m) {
            // c_m(xi) = sum_{k >= m} C(k, m) c[k] xi^{k - m}
            Coeffs cm;
            for (std::size_t k = m; k < deg; ++k) {
                double binom = 1.0;
                for (std::size_t i = 0; i < m; ++i) binom *= double(k - i) / double(m - i);
                cm.push_back(binom * c[k]);
            }
            detail::poly_trim(cm);
            sp.weights.emplace_back(multiply(term.window, compose_on(cm, x0, term.window)));
        }
        return sp;
    }

    // Piecewise polynomial t -> outer(x0(t)) over the window's support.
    static PiecewisePoly compose_on(const Coeffs& outer, const PiecewisePoly& x0,
                                    const PiecewisePoly& window) {
        std::vector<double> edges = window.breakpoints();
        for (double e : x0.breakpoints()) edges.push_back(e);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        const auto ws = window.support();
        std::vector<PiecewisePoly::Piece> out;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double lo = edges[i], hi = edges[i + 1];
            if (hi <= ws->first || lo >= ws->second) continue;
            const double mid = lo + 0.5 * (hi - lo);
            Coeffs inner;
            for (const auto& pc : x0.pieces())
                if (pc.lo <= mid && mid < pc.hi) {
                    inner = detail::poly_shift_origin(pc.c, lo - pc.lo);
                    break;
                }
            out.push_back({lo, hi, detail::poly_compose(outer, inner)});
        }
        return PiecewisePoly(std::move(out));
    }

    void accumulate_gauss(const ShiftedGauss& sg, double t0, double t1,
                          std::vector<double>& phi) const {
        // Split the slice at window/loop breakpoints, then a 3-point rule
        // per smooth cell; the quadrature error is far below the splitting
        // error of the propagator.
        auto cell = [&](double a, double b) {
            const GaussRule& rule = gauss_legendre(3);
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const double s = mid + half * rule.nodes[q];
                const double wq = rule.weights[q] * half * sg.window(s);
                if (wq == 0.0) continue;
                const double shift = sg.loop(s);
                const double inv2w2 = 1.0 / (2.0 * sg.gauss.width * sg.gauss.width);
                for (int j = 0; j < grid_.n(); ++j) {
                    const double d = grid_.xs()[j] + shift - sg.gauss.center;
                    phi[j] += wq * sg.gauss.amplitude * std::exp(-d * d * inv2w2);
                }
            }
        };
        double a = t0;
        for (double c : sg.cuts) {
            if (c <= t0 || c >= t1) continue;
            cell(a, c);
            a = c;
        }
        cell(a, t1);
    }

    const Grid& grid_;
    bool has_linear_ = false;
    CumulativeIntegral linear_;
    std::vector<StaticTerm> statics_;
    std::vector<ShiftedPoly> shifted_polys_;
    std::vector<ShiftedGauss> shifted_gauss_;
    std::vector<std::vector<double>> xpow_;
    std::size_t need_powers_ = 0;
};

long step_count(const PropagatorConfig& cfg) {
    const double raw = (cfg.t_f - cfg.t_i) / cfg.dt;
    const long n = std::lround(raw);
    if (n < 0 || std::abs(raw - double(n)) > 1e-9 * std::max(1.0, std::abs(raw)))
        throw ConfigError("propagation window is not an integral number of steps");
    return n;
}

void check_support(const Functional& f, const PropagatorConfig& cfg) {
    validate_functional(f);
    if (f.dim != 1) throw DimensionMismatch("propagation requires dim = 1");
    if (const auto sup = f.support()) {
        const double slack = 1e-9;
        if (sup->first < cfg.t_i - slack || sup->second > cfg.t_f + slack)
            throw SupportNotCovered("propagation window does not contain the support");
    }
}

struct StepContext {
    std::vector<cplx> drift, drift_inv;
    std::vector<double> phi;
    const KickPlan plan;
    const double eta;

    StepContext(const Functional& f, const Grid& grid, const PropagatorConfig& cfg)
        : plan(f, grid), eta(cfg.sign == SignConvention::S4 ? 1.0 : -1.0) {
        drift.resize(grid.n());
        drift_inv.resize(grid.n());
        for (int j = 0; j < grid.n(); ++j) {
            const double ph = -0.5 * grid.ks()[j] * grid.ks()[j] * cfg.dt;
            drift[j] = cplx(std::cos(ph), std::sin(ph));
            drift_inv[j] = std::conj(drift[j]);
        }
        phi.resize(grid.n());
    }
};

void apply_kick(WaveState& s, StepContext& ctx, double t0, double t1, double direction,
                kernels::Exec exec) {
    if (ctx.plan.empty()) return;
    std::fill(ctx.phi.begin(), ctx.phi.end(), 0.0);
    ctx.plan.accumulate(t0, t1, ctx.phi);
    kernels::apply_phase(s.amp.data(), ctx.phi.data(), direction * ctx.eta, ctx.phi.size(), exec);
}

void apply_drift(WaveState& s, const StepContext& ctx, bool inverse, kernels::Exec exec) {
    kernels::fft(s.grid->plan(), s.amp.data(), false, exec);
    kernels::pointwise_mul(s.amp.data(), (inverse ? ctx.drift_inv : ctx.drift).data(),
                           s.amp.size(), exec);
    kernels::fft(s.grid->plan(), s.amp.data(), true, exec);
}

void check_tails(const WaveState& s, const PropagatorConfig& cfg) {
    if (!cfg.monitor_tails) return;
    if (std::max(std::abs(s.amp.front()), std::abs(s.amp.back())) > cfg.tail_threshold)
        throw TailOverflow("evolve: wavefunction reached the grid boundary");
}

WaveState run_steps(const WaveState& in, const Functional& f, const PropagatorConfig& cfg,
                    bool inverse) {
    check_support(f, cfg);
    const long n = step_count(cfg);
    WaveState out = in;
    StepContext ctx(f, *in.grid, cfg);
    const kernels::Exec exec = cfg.exec;
    const double h = 0.5 * cfg.dt;
    auto mid = [&](long s) { return cfg.t_i + s * cfg.dt + h; };

    if (cfg.scheme == Scheme::Strang) {
        // Interior half-kicks of adjacent steps are fused into one phase
        // application; the inverse walk mirrors the fused sequence, so it
        // stays the exact adjoint of the forward map.
        if (!inverse) {
            apply_kick(out, ctx, cfg.t_i, mid(0), 1.0, exec);
            for (long s = 0; s < n; ++s) {
                apply_drift(out, ctx, false, exec);
                if (s + 1 < n)
                    apply_kick(out, ctx, mid(s), mid(s + 1), 1.0, exec);
                else
                    apply_kick(out, ctx, mid(s), cfg.t_f, 1.0, exec);
                check_tails(out, cfg);
            }
        } else {
            apply_kick(out, ctx, mid(n - 1), cfg.t_f, -1.0, exec);
            for (long s = n - 1; s >= 0; --s) {
                apply_drift(out, ctx, true, exec);
                if (s > 0)
                    apply_kick(out, ctx, mid(s - 1), mid(s), -1.0, exec);
                else
                    apply_kick(out, ctx, cfg.t_i, mid(0), -1.0, exec);
                check_tails(out, cfg);
            }
        }
    } else {
        for (long s = 0; s < n; ++s) {
            const long step = inverse ? n - 1 - s : s;
            const double t0 = cfg.t_i + step * cfg.dt;
            const double t1 = cfg.t_i + (step + 1) * cfg.dt;
            if (!inverse) {
                apply_kick(out, ctx, t0, t1, 1.0, exec);
                apply_drift(out, ctx, false, exec);
            } else {
                apply_drift(out, ctx, true, exec);
                apply_kick(out, ctx, t0, t1, -1.0, exec);
            }
            check_tails(out, cfg);
        }
    }

    const double cphase = (inverse ? -1.0 : 1.0) * ctx.eta * f.constant;
    if (cphase != 0.0) {
        const cplx ph(std::cos(cphase), std::sin(cphase));
        for (auto& a : out.amp) a *= ph;
    }
    return out;
}

} // namespace

WaveState evolve(const WaveState& in, const Functional& f, const PropagatorConfig& cfg) {
    return run_steps(in, f, cfg, false);
}

WaveState scattering(const WaveState& in, const Functional& f, const PropagatorConfig& cfg) {
    WaveState s = free_evolve(in, cfg.t_i, cfg.exec);
    s = run_steps(s, f, cfg, false);
    return free_evolve(s, -cfg.t_f, cfg.exec);
}

WaveState scattering_inverse(const WaveState& in, const Functional& f,
                             const PropagatorConfig& cfg) {
    WaveState s = free_evolve(in, cfg.t_f, cfg.exec);
    s = run_steps(s, f, cfg, true);
    return free_evolve(s, -cfg.t_i, cfg.exec);
}

} // namespace dynalg
