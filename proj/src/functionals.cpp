#include "dynalg/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "dynalg/errors.hpp"
#include "dynalg/quadrature.hpp"

namespace dynalg {

using detail::Coeffs;

// ---- LoopPath -------------------------------------------------------------

LoopPath::LoopPath(std::vector<PiecewisePoly> components) : components_(std::move(components)) {
    finalize_and_check();
}

void LoopPath::finalize_and_check() {
    velocity_.clear();
    acceleration_.clear();
    for (const auto& c : components_) {
        velocity_.push_back(c.derivative());
        acceleration_.push_back(velocity_.back().derivative());
    }
    // Value and velocity must be continuous across every edge, including
    // the support boundary where they must meet zero.
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& x = components_[i];
        const auto& v = velocity_[i];
        const double scale = std::max(1.0, x.value_bound());
        for (double e : x.breakpoints()) {
            const double el = e - 1e-9 * std::max(1.0, std::abs(e));
            if (std::abs(x(el) - x(e)) > 1e-8 * scale)
                throw InvalidLoop("loop value discontinuous at a breakpoint");
            if (std::abs(v(el) - v(e)) > 1e-6 * std::max(1.0, v.value_bound()))
                throw InvalidLoop("loop velocity discontinuous at a breakpoint");
        }
    }
}

bool LoopPath::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const PiecewisePoly& p) { return p.is_zero(); });
}

LoopPath LoopPath::shifted(double tau) const {
    std::vector<PiecewisePoly> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.shifted(tau));
    return LoopPath(std::move(out));
}

LoopPath add(const LoopPath& a, const LoopPath& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("loop dims differ");
    std::vector<PiecewisePoly> out;
    out.reserve(a.components().size());
    for (int i = 0; i < a.dim(); ++i) out.push_back(add(a.components()[i], b.components()[i]));
    return LoopPath(std::move(out));
}

LoopPath LoopPath::zero(int dim) {
    return LoopPath(std::vector<PiecewisePoly>(static_cast<std::size_t>(dim)));
}

// ---- shapes ---------------------------------------------------------------

double shape_value(const PotentialShape& s, double x) {
    if (const auto* p = std::get_if<PolynomialShape>(&s)) return detail::poly_eval(p->coeffs, x);
    const auto& g = std::get<GaussianShape>(s);
    const double d = x - g.center;
    return g.amplitude * std::exp(-d * d / (2.0 * g.width * g.width));
}

// ---- Functional -----------------------------------------------------------

bool Functional::is_constant_only() const {
    return potentials.empty() &&
           std::all_of(density.begin(), density.end(),
                       [](const PiecewisePoly& p) { return p.is_zero(); });
}

std::optional<std::pair<double, double>> Functional::support() const {
    bool any = false;
    double lo = 0.0, hi = 0.0;
    auto extend = [&](const std::optional<std::pair<double, double>>& s) {
        if (!s) return;
        if (!any) {
            lo = s->first;
            hi = s->second;
            any = true;
        } else {
            lo = std::min(lo, s->first);
            hi = std::max(hi, s->second);
        }
    };
    for (const auto& p : density) extend(p.support());
    for (const auto& t : potentials) extend(t.window.support());
    if (!any) return std::nullopt;
    return std::make_pair(lo, hi);
}

Functional Functional::constant_functional(double h, int dim) {
    Functional f;
    f.dim = dim;
    f.density.assign(static_cast<std::size_t>(dim), PiecewisePoly{});
    f.constant = h;
    f.constant_mode = ConstantMode::Explicit;
    return f;
}

void validate_functional(const Functional& f) {
    if (f.dim < 1) throw DimensionMismatch("dim must be >= 1");
    if (f.density.size() != static_cast<std::size_t>(f.dim))
        throw DimensionMismatch("density component count != dim");
    if (!f.potentials.empty() && f.dim != 1)
        throw DimensionMismatch("potential terms are only supported for dim 1");
    for (const auto& t : f.potentials) {
        if (const auto* g = std::get_if<GaussianShape>(&t.shape)) {
            if (!(g->width > 0.0)) throw InvalidPiecewise("gaussian width must be positive");
        } else {
            const auto& p = std::get<PolynomialShape>(t.shape);
            if (p.coeffs.size() > 5) throw InvalidPiecewise("polynomial shape degree > 4");
        }
        if (t.shift && t.shift->dim() != 1)
            throw DimensionMismatch("potential shift must be one-dimensional");
    }
}

// ---- density calculus -----------------------------------------------------

Moments moments(const Density& f) {
    Moments m;
    m.a.reserve(f.size());
    m.b.reserve(f.size());
    for (const auto& c : f) {
        m.a.push_back(c.integral());
        m.b.push_back(c.moment(1));
    }
    return m;
}

double kernel_integral(const Density& f, const Density& g) {
    if (f.size() != g.size()) throw DimensionMismatch("kernel_integral: dims differ");
    double v = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) v += kernel_abs(f[i], g[i]);
    return v;
}

double h_constant(const Density& f, HConvention conv) {
    const double k = kernel_integral(f, f);
    return conv == HConvention::Consistent ? -0.25 * k : 0.5 * k;
}

double delta_pairing(const Density& f, const Density& g) {
    if (f.size() != g.size()) throw DimensionMismatch("delta_pairing: dims differ");
    double v = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) v += kernel_delta(f[i], g[i]);
    return v;
}

bool moment_equivalent(const Density& f, const Density& g, double rel_tol) {
    if (f.size() != g.size()) return false;
    const Moments mf = moments(f), mg = moments(g);
    double scale = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        scale = std::max({scale, std::abs(mf.a[i]), std::abs(mf.b[i]), std::abs(mg.a[i]),
                          std::abs(mg.b[i])});
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::abs(mf.a[i] - mg.a[i]) > rel_tol * scale ||
            std::abs(mf.b[i] - mg.b[i]) > rel_tol * scale)
            return false;
    return true;
}

// ---- constructors and algebra ----------------------------------------------

Functional linear_functional(const Density& f, HConvention conv) {
    Functional out;
    out.dim = static_cast<int>(f.size());
    out.density = f;
    out.constant = h_constant(f, conv);
    out.constant_mode = ConstantMode::AutoH;
    validate_functional(out);
    return out;
}

Functional linear_functional_explicit(const Density& f, double constant) {
    Functional out;
    out.dim = static_cast<int>(f.size());
    out.density = f;
    out.constant = constant;
    out.constant_mode = ConstantMode::Explicit;
    validate_functional(out);
    return out;
}

Functional add(const Functional& a, const Functional& b) {
    if (a.dim != b.dim) throw DimensionMismatch("add: functional dims differ");
    Functional out;
    out.dim = a.dim;
    out.density.reserve(a.density.size());
    for (std::size_t i = 0; i < a.density.size(); ++i)
        out.density.push_back(add(a.density[i], b.density[i]));
    out.constant = a.constant + b.constant;
    out.constant_mode = ConstantMode::Explicit;
    out.potentials = a.potentials;
    out.potentials.insert(out.potentials.end(), b.potentials.begin(), b.potentials.end());
    validate_functional(out);
    return out;
}

LoopPath loop_from_difference(const Density& f, const Density& f_prime) {
    if (f.size() != f_prime.size()) throw DimensionMismatch("loop_from_difference: dims differ");
    if (!moment_equivalent(f, f_prime))
        throw MomentMismatch("densities do not share their first two moments");

    std::vector<PiecewisePoly> comps;
    comps.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const PiecewisePoly g = add(f_prime[i], f[i].scaled(-1.0));
        if (g.is_zero()) {
            comps.push_back({});
            continue;
        }
        // x0(t) = t * ∫_{-inf}^t g  -  ∫_{-inf}^t s g(s) ds, assembled
        // piecewise over the support hull with the gaps filled in.
        std::vector<PiecewisePoly::Piece> out;
        double acc0 = 0.0, acc1 = 0.0; // running ∫ g, ∫ s g
        const std::vector<double> edges = g.breakpoints();
        for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
            const double lo = edges[e], hi = edges[e + 1];
            Coeffs gl; // g about lo (zero polynomial in gaps)
            for (const auto& pc : g.pieces())
                if (pc.lo <= lo && lo < pc.hi) {
                    gl = detail::poly_shift_origin(pc.c, lo - pc.lo);
                    break;
                }
            const Coeffs a0 = detail::poly_antiderivative(gl);
            const Coeffs a1 = detail::poly_antiderivative(detail::poly_mul_linear(gl, lo));
            // (lo + u) * (acc0 + A0(u)) - (acc1 + A1(u))
            Coeffs run0 = a0;
            if (run0.empty()) run0.assign(1, 0.0);
            run0[0] += acc0;
            Coeffs piece = detail::poly_mul_linear(run0, lo);
            piece = detail::poly_add(piece, detail::poly_scale(a1, -1.0));
            if (piece.empty()) piece.assign(1, 0.0);
            piece[0] -= acc1;
            detail::poly_trim(piece);
            out.push_back({lo, hi, std::move(piece)});
            acc0 += detail::poly_integral(gl, hi - lo);
            acc1 += detail::poly_integral(detail::poly_mul_linear(gl, lo), hi - lo);
        }
        comps.push_back(PiecewisePoly(std::move(out)));
    }
    return LoopPath(std::move(comps));
}

Functional boundary_action(const LoopPath& x0) {
    Functional out;
    out.dim = x0.dim();
    out.constant_mode = ConstantMode::Explicit;
    double kinetic = 0.0;
    for (int i = 0; i < x0.dim(); ++i) {
        out.density.push_back(x0.acceleration()[i].scaled(-1.0));
        kinetic += 0.5 * integral_product(x0.velocity()[i], x0.velocity()[i]);
    }
    out.constant = kinetic;
    return out;
}

Functional shift_by_loop(const Functional& f, const LoopPath& x0) {
    if (f.dim != x0.dim()) throw DimensionMismatch("shift_by_loop: dims differ");
    Functional out = f;
    out.constant_mode = ConstantMode::Explicit;
    for (int i = 0; i < f.dim; ++i)
        out.constant += integral_product(f.density[i], x0.components()[i]);
    if (!x0.is_zero())
        for (auto& term : out.potentials)
            term.shift = term.shift ? add(*term.shift, x0) : x0;
    return out;
}

Functional time_translate(const Functional& f, double tau) {
    Functional out;
    out.dim = f.dim;
    out.constant = f.constant;
    out.constant_mode = f.constant_mode;
    for (const auto& d : f.density) out.density.push_back(d.shifted(tau));
    for (const auto& t : f.potentials) {
        PotentialTerm nt;
        nt.window = t.window.shifted(tau);
        nt.shape = t.shape;
        if (t.shift) nt.shift = t.shift->shifted(tau);
        out.potentials.push_back(std::move(nt));
    }
    return out;
}

namespace {

// Breakpoints of everything entering one potential-term integrand,
// restricted to the window's support.
std::vector<double> term_cuts(const PotentialTerm& term, const SampledPath& x) {
    std::vector<double> cuts = term.window.breakpoints();
    auto append = [&cuts](const std::vector<double>& more) {
        cuts.insert(cuts.end(), more.begin(), more.end());
    };
    append(x.components[0].breakpoints());
    if (term.shift) append(term.shift->components()[0].breakpoints());
    const auto sup = term.window.support();
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::erase_if(cuts, [&](double t) { return t < sup->first || t > sup->second; });
    return cuts;
}

double integrate_potential_term(const PotentialTerm& term, const SampledPath& x) {
    if (term.window.is_zero()) return 0.0;
    auto arg = [&](double t) {
        double v = x.components[0](t);
        if (term.shift) v += term.shift->components()[0](t);
        return v;
    };
    auto integrand = [&](double t) { return term.window(t) * shape_value(term.shape, arg(t)); };

    const std::vector<double> cuts = term_cuts(term, x);
    double total = 0.0;
    const bool poly = std::holds_alternative<PolynomialShape>(term.shape);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (!(b > a)) continue;
        if (poly) {
            // Piecewise-polynomial integrand; a 16-point rule is exact up
            // to degree 31, beyond anything the catalog can produce.
            total += gauss_integrate(integrand, a, b, 16);
        } else {
            total += adaptive_integrate(integrand, a, b, 1e-11);
        }
    }
    return total;
}

} // namespace

double evaluate(const Functional& f, const SampledPath& x) {
    validate_functional(f);
    if (f.dim != x.dim()) throw DimensionMismatch("evaluate: dims differ");
    if (const auto sup = f.support()) {
        if (sup->first < x.t_lo - 1e-12 || sup->second > x.t_hi + 1e-12)
            throw DomainTooSmall("path interval does not cover the functional's support");
    }
    double v = f.constant;
    for (int i = 0; i < f.dim; ++i) v += integral_product(f.density[i], x.components[i]);
    for (const auto& term : f.potentials) v += integrate_potential_term(term, x);
    return v;
}

} // namespace dynalg
