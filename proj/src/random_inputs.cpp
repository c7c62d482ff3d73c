#include "dynalg/random_inputs.hpp"

#include <algorithm>
#include <cmath>

#include "dynalg/errors.hpp"

namespace dynalg {

PiecewisePoly smooth_bump(double a, double b, double ramp, double height) {
    const double r = std::min(ramp, 0.45 * (b - a));
    std::vector<PiecewisePoly::Piece> pieces;
    pieces.push_back({a, a + r, {0.0, 0.0, 3.0 * height / (r * r), -2.0 * height / (r * r * r)}});
    if (b - r > a + r) pieces.push_back({a + r, b - r, {height}});
    pieces.push_back({b - r, b, {height, 0.0, -3.0 * height / (r * r), 2.0 * height / (r * r * r)}});
    return PiecewisePoly(std::move(pieces));
}

PiecewisePoly random_profile(Rng& rng, const ProfileOptions& opt) {
    if (opt.smooth) {
        const int nb = rng.uniform_int(1, 2);
        PiecewisePoly out;
        for (int i = 0; i < nb; ++i) {
            const double w = rng.uniform(0.8, std::min(2.5, opt.t_hi - opt.t_lo));
            const double a = rng.uniform(opt.t_lo, opt.t_hi - w);
            const double ramp = rng.uniform(0.25, 0.45) * w;
            const double h = rng.uniform(0.25, 1.0) * opt.amplitude *
                             (rng.uniform() < 0.5 ? -1.0 : 1.0);
            out = add(out, smooth_bump(a, a + w, ramp, h));
        }
        return out;
    }
    const int np = rng.uniform_int(1, opt.max_pieces);
    // Random disjoint intervals: sorted edges with a minimum width.
    std::vector<double> edges;
    for (int i = 0; i < 2 * np; ++i) edges.push_back(rng.uniform(opt.t_lo, opt.t_hi));
    std::sort(edges.begin(), edges.end());
    std::vector<PiecewisePoly::Piece> pieces;
    for (int i = 0; i < np; ++i) {
        const double lo = edges[2 * i], hi = edges[2 * i + 1];
        if (hi - lo < 0.05) continue;
        const int deg = rng.uniform_int(0, opt.max_degree);
        detail::Coeffs c(deg + 1);
        // Draw in a width-normalized variable so values, not coefficients,
        // are O(amplitude).
        const double w = hi - lo;
        double wk = 1.0;
        for (int k = 0; k <= deg; ++k) {
            c[k] = rng.uniform(-opt.amplitude, opt.amplitude) / wk;
            wk *= w;
        }
        pieces.push_back({lo, hi, std::move(c)});
    }
    if (pieces.empty())
        pieces.push_back({opt.t_lo, opt.t_lo + 0.5, {rng.uniform(-opt.amplitude, opt.amplitude)}});
    return PiecewisePoly(std::move(pieces));
}

Density random_density(Rng& rng, int dim, const ProfileOptions& opt) {
    Density d;
    d.reserve(dim);
    for (int i = 0; i < dim; ++i) d.push_back(random_profile(rng, opt));
    return d;
}

Density cap_moments(Density f, double cap) {
    const Moments m = moments(f);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max({worst, std::abs(m.a[i]), std::abs(m.b[i])});
    if (worst > cap) {
        const double s = cap / worst;
        for (auto& c : f) c = c.scaled(s);
    }
    return f;
}

namespace {

// Zero-moment correction: r minus the combination of two reference bumps
// that matches r's zeroth and first moments.
PiecewisePoly zero_moment_profile(Rng& rng, const ProfileOptions& opt) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        ProfileOptions ropt = opt;
        ropt.amplitude = 0.5 * opt.amplitude;
        const PiecewisePoly r = random_profile(rng, ropt);
        const double span = opt.t_hi - opt.t_lo;
        const double w = 0.3 * span;
        const PiecewisePoly b1 =
            smooth_bump(opt.t_lo, opt.t_lo + w, 0.3 * w, 1.0);
        const PiecewisePoly b2 = smooth_bump(opt.t_hi - w, opt.t_hi, 0.3 * w, 1.0);
        const double a11 = b1.integral(), a12 = b2.integral();
        const double a21 = b1.moment(1), a22 = b2.moment(1);
        const double det = a11 * a22 - a12 * a21;
        if (std::abs(det) < 1e-6) continue;
        const double r0 = r.integral(), r1 = r.moment(1);
        const double c1 = (r0 * a22 - r1 * a12) / det;
        const double c2 = (a11 * r1 - a21 * r0) / det;
        PiecewisePoly z = add(r, add(b1.scaled(-c1), b2.scaled(-c2)));
        if (!z.is_zero()) return z;
    }
    throw ConfigError("zero_moment_profile: generation failed");
}

} // namespace

MatchedPair random_matched_pair(Rng& rng, int dim, const ProfileOptions& opt) {
    MatchedPair p;
    p.f = random_density(rng, dim, opt);
    p.f_prime.reserve(dim);
    for (int i = 0; i < dim; ++i)
        p.f_prime.push_back(add(p.f[i], zero_moment_profile(rng, opt)));
    return p;
}

LoopPath random_loop(Rng& rng, const ProfileOptions& opt, double size) {
    const PiecewisePoly z = zero_moment_profile(rng, opt);
    const Density none{PiecewisePoly{}};
    LoopPath raw = loop_from_difference(none, Density{z});
    // Scale to the requested amplitude.
    double peak = 0.0;
    if (const auto sup = raw.components()[0].support()) {
        for (int i = 0; i <= 256; ++i) {
            const double t = sup->first + (sup->second - sup->first) * i / 256.0;
            peak = std::max(peak, std::abs(raw.value(0, t)));
        }
    }
    if (peak <= 0.0) return raw;
    return loop_from_difference(none, Density{z.scaled(size / peak)});
}

SampledPath random_path(Rng& rng, int dim, double t_lo, double t_hi) {
    SampledPath path;
    path.t_lo = t_lo;
    path.t_hi = t_hi;
    const int nk = rng.uniform_int(2, 4);
    std::vector<double> knots{t_lo};
    for (int i = 1; i < nk; ++i) knots.push_back(rng.uniform(t_lo, t_hi));
    knots.push_back(t_hi);
    std::sort(knots.begin(), knots.end());
    for (int c = 0; c < dim; ++c) {
        std::vector<double> vals;
        for (std::size_t i = 0; i < knots.size(); ++i) vals.push_back(rng.uniform(-1.0, 1.0));
        std::vector<PiecewisePoly::Piece> pieces;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            const double a = knots[i], b = knots[i + 1];
            if (!(b > a)) continue;
            const double w = b - a;
            // Linear interpolation plus interior wiggles vanishing at the
            // knots, so the path stays continuous.
            detail::Coeffs c0{vals[i], (vals[i + 1] - vals[i]) / w};
            const double q = rng.uniform(-1.0, 1.0);
            const double cub = rng.uniform(-1.0, 1.0);
            // q (t-a)(b-t) + cub (t-a)^2 (b-t), in local coordinates.
            detail::Coeffs bump{0.0, q * w, -q};
            detail::Coeffs bump2{0.0, 0.0, cub * w, -cub};
            c0 = detail::poly_add(c0, detail::poly_scale(bump, 1.0 / w));
            c0 = detail::poly_add(c0, detail::poly_scale(bump2, 1.0 / w));
            pieces.push_back({a, b, std::move(c0)});
        }
        path.components.push_back(PiecewisePoly(std::move(pieces)));
    }
    return path;
}

} // namespace dynalg
