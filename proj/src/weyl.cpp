#include "dynalg/weyl.hpp"

#include <cmath>
#include <numbers>

#include "dynalg/errors.hpp"

namespace dynalg {

double wrap_phase(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(theta, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

WeylElement WeylElement::identity(int dim) {
    WeylElement w;
    w.a.assign(static_cast<std::size_t>(dim), 0.0);
    w.b.assign(static_cast<std::size_t>(dim), 0.0);
    return w;
}

bool approx_equal(const WeylElement& u, const WeylElement& v, double tol) {
    if (u.dim() != v.dim()) return false;
    if (std::abs(wrap_phase(u.theta - v.theta)) > tol) return false;
    for (int i = 0; i < u.dim(); ++i)
        if (std::abs(u.a[i] - v.a[i]) > tol || std::abs(u.b[i] - v.b[i]) > tol) return false;
    return true;
}

WeylElement weyl_of(const Functional& f, HConvention conv) {
    if (!f.linear_sector())
        throw NotLinearSector("weyl_of: functional has potential terms");
    WeylElement w;
    const Moments m = moments(f.density);
    w.a = m.a;
    w.b = m.b;
    w.theta = wrap_phase(f.constant - h_constant(f.density, conv));
    return w;
}

namespace {

double symplectic(const WeylElement& u, const WeylElement& v) {
    double s = 0.0;
    for (int i = 0; i < u.dim(); ++i) s += u.a[i] * v.b[i] - u.b[i] * v.a[i];
    return s;
}

} // namespace

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("multiply: weyl dims differ");
    WeylElement w;
    w.theta = wrap_phase(u.theta + v.theta - 0.5 * symplectic(u, v));
    w.a.resize(u.a.size());
    w.b.resize(u.b.size());
    for (int i = 0; i < u.dim(); ++i) {
        w.a[i] = u.a[i] + v.a[i];
        w.b[i] = u.b[i] + v.b[i];
    }
    return w;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement r;
    r.theta = wrap_phase(-w.theta);
    r.a.resize(w.a.size());
    r.b.resize(w.b.size());
    for (int i = 0; i < w.dim(); ++i) {
        r.a[i] = -w.a[i];
        r.b[i] = -w.b[i];
    }
    return r;
}

double group_commutator(const WeylElement& u, const WeylElement& v) {
    const WeylElement w = multiply(multiply(u, v), multiply(inverse(u), inverse(v)));
    return w.theta;
}

std::vector<std::vector<std::complex<double>>> recover_commutators(double eps, int dim) {
    using cd = std::complex<double>;
    std::vector<std::vector<cd>> m(dim, std::vector<cd>(dim));
    for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
            WeylElement u = WeylElement::identity(dim);
            WeylElement v = WeylElement::identity(dim);
            u.a[k] = eps;
            v.b[l] = eps;
            const double phase = group_commutator(u, v);
            m[k][l] = cd(0.0, -phase / (eps * eps));
        }
    }
    return m;
}

WeylElement normalize(const GroupWord& word, HConvention conv) {
    int dim = 1;
    for (const auto& f : word.factors) {
        dim = f.functional.dim;
        break;
    }
    WeylElement acc = WeylElement::identity(dim);
    acc.theta = wrap_phase(word.prefactor);
    for (const auto& f : word.factors) {
        if (!f.functional.linear_sector())
            throw NotLinearSector("normalize: word contains a potential-term functional");
        WeylElement w = weyl_of(f.functional, conv);
        if (f.exponent == -1) w = inverse(w);
        // Performed later means multiplied from the left.
        acc = multiply(w, acc);
    }
    return acc;
}

} // namespace dynalg
