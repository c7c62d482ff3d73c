#pragma once

// Dense real polynomials as coefficient vectors, c[k] multiplying u^k.
// All piecewise calculus keeps coefficients in a piece-local variable
// u = t - t_lo so that values, not raw coefficients, set the rounding
// scale; conversions to the global time variable happen only at the
// serialization boundary.

#include <cmath>
#include <cstddef>
#include <vector>

namespace dynalg::detail {

using Coeffs = std::vector<double>;

inline double poly_eval(const Coeffs& c, double u) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * u + c[k];
    return v;
}

inline void poly_trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

inline Coeffs poly_add(const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    poly_trim(r);
    return r;
}

inline Coeffs poly_scale(const Coeffs& a, double s) {
    Coeffs r(a);
    for (double& x : r) x *= s;
    poly_trim(r);
    return r;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Multiply by the linear factor (a0 + u).
inline Coeffs poly_mul_linear(const Coeffs& a, double a0) {
    if (a.empty()) return {};
    Coeffs r(a.size() + 1, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        r[k] += a0 * a[k];
        r[k + 1] += a[k];
    }
    poly_trim(r);
    return r;
}

inline Coeffs poly_derivative(const Coeffs& a) {
    if (a.size() <= 1) return {};
    Coeffs r(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * double(k);
    poly_trim(r);
    return r;
}

// Antiderivative vanishing at u = 0.
inline Coeffs poly_antiderivative(const Coeffs& a) {
    if (a.empty()) return {};
    Coeffs r(a.size() + 1, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k + 1] = a[k] / double(k + 1);
    return r;
}

// Integral over [0, w].
inline double poly_integral(const Coeffs& a, double w) {
    double v = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) v = v * w + a[k] / double(k + 1);
    return v * w;
}

// Re-express about a new local origin: given p(u) with u measured from o,
// return coefficients about o' = o + delta (same polynomial, new variable
// v = u - delta).
inline Coeffs poly_shift_origin(const Coeffs& a, double delta) {
    if (a.empty() || delta == 0.0) return a;
    const std::size_t n = a.size();
    Coeffs r(a);
    // Synthetic division by (v) after substituting u = v + delta; done by
    // repeated Horner passes, numerically equivalent to the binomial sum.
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j > k; --j) r[j - 1] += delta * r[j];
    poly_trim(r);
    return r;
}

// p(q(u)) for small degrees; used to compose catalog potentials with paths.
inline Coeffs poly_compose(const Coeffs& outer, const Coeffs& inner) {
    Coeffs r;
    for (std::size_t k = outer.size(); k-- > 0;) {
        r = poly_mul(r, inner);
        if (outer[k] != 0.0) {
            if (r.empty()) r.assign(1, 0.0);
            r[0] += outer[k];
        }
    }
    poly_trim(r);
    return r;
}

// Powers (a0 + u)^k, used when a moment weight t^k has to be expressed in
// the local variable.
inline Coeffs poly_linear_power(double a0, unsigned k) {
    Coeffs r{1.0};
    for (unsigned i = 0; i < k; ++i) r = poly_mul_linear(r, a0);
    return r;
}

inline double poly_max_abs(const Coeffs& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

} // namespace dynalg::detail
