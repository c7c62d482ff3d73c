#include "dynalg/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dynalg::kernels {

FftPlan::FftPlan(int size) : n(size) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("FftPlan: n must be a power of two >= 2");
    rev.resize(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < log2n; ++b)
            if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
        rev[i] = r;
    }
    w.resize(n / 2);
    for (int k = 0; k < n / 2; ++k) {
        const double ang = -2.0 * std::numbers::pi * k / n;
        w[k] = cplx(std::cos(ang), std::sin(ang));
    }
}

int max_threads() {
    static const int cached = [] {
        int m = 1;
#ifdef _OPENMP
        m = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("DYNALG_THREADS")) {
            const int cap = std::atoi(env);
            if (cap >= 1 && cap < m) m = cap;
        }
        return m < 1 ? 1 : m;
    }();
    return cached;
}

// The butterflies are written on raw re/im pairs; std::complex products
// would otherwise route through the IEEE corner-case helper on every
// multiply. std::complex<double> is layout-compatible with double[2].
namespace {

inline void bit_reverse_permute(const FftPlan& plan, cplx* a) {
    for (int i = 0; i < plan.n; ++i) {
        const int j = plan.rev[i];
        if (i < j) std::swap(a[i], a[j]);
    }
}

inline void stage_range(const double* w, double* d, bool inverse, int len, int stride,
                        long ufirst, long ulast) {
    const int half = len >> 1;
    const double sgn = inverse ? -1.0 : 1.0;
    for (long u = ufirst; u < ulast; ++u) {
        const long g = u / half, p = u - g * half;
        const long i = 2 * (g * len + p), j = i + 2 * half;
        const double wr = w[2 * p * stride];
        const double wi = sgn * w[2 * p * stride + 1];
        const double xr = d[j], xi = d[j + 1];
        const double tr = xr * wr - xi * wi;
        const double ti = xr * wi + xi * wr;
        d[j] = d[i] - tr;
        d[j + 1] = d[i + 1] - ti;
        d[i] += tr;
        d[i + 1] += ti;
    }
}

} // namespace

// ---- serial reference -------------------------------------------------------

namespace serial {

void fft(const FftPlan& plan, cplx* a, bool inverse) {
    bit_reverse_permute(plan, a);
    const int n = plan.n;
    double* d = reinterpret_cast<double*>(a);
    const double* w = reinterpret_cast<const double*>(plan.w.data());
    const double sgn = inverse ? -1.0 : 1.0;
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len >> 1;
        const int stride = n / len;
        for (int base = 0; base < n; base += len) {
            const double* wp = w;
            double* lo = d + 2 * base;
            double* hi = lo + 2 * half;
            for (int p = 0; p < half; ++p) {
                const double wr = wp[0], wi = sgn * wp[1];
                const double xr = hi[0], xi = hi[1];
                const double tr = xr * wr - xi * wi;
                const double ti = xr * wi + xi * wr;
                hi[0] = lo[0] - tr;
                hi[1] = lo[1] - ti;
                lo[0] += tr;
                lo[1] += ti;
                wp += 2 * stride;
                lo += 2;
                hi += 2;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / n;
        for (int i = 0; i < 2 * n; ++i) d[i] *= s;
    }
}

void pointwise_mul(cplx* x, const cplx* m, std::size_t n) {
    double* xa = reinterpret_cast<double*>(x);
    const double* ma = reinterpret_cast<const double*>(m);
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = xa[2 * i], xi = xa[2 * i + 1];
        const double mr = ma[2 * i], mi = ma[2 * i + 1];
        xa[2 * i] = xr * mr - xi * mi;
        xa[2 * i + 1] = xr * mi + xi * mr;
    }
}

void apply_phase(cplx* x, const double* phase, double scale, std::size_t n) {
    double* xa = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = std::cos(scale * phase[i]);
        const double s = std::sin(scale * phase[i]);
        const double xr = xa[2 * i], xi = xa[2 * i + 1];
        xa[2 * i] = xr * c - xi * s;
        xa[2 * i + 1] = xr * s + xi * c;
    }
}

double norm_sq(const cplx* x, std::size_t n) {
    double s = 0.0;
    const double* xa = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < 2 * n; ++i) s += xa[i] * xa[i];
    return s;
}

cplx dot(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    const double* xa = reinterpret_cast<const double*>(x);
    const double* ya = reinterpret_cast<const double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = xa[2 * i], ai = xa[2 * i + 1];
        const double br = ya[2 * i], bi = ya[2 * i + 1];
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

} // namespace serial

// ---- OpenMP kernels ----------------------------------------------------------

namespace omp {

void fft(const FftPlan& plan, cplx* a, bool inverse) {
#ifdef _OPENMP
    const long nb = plan.n / 2;
    double* d = reinterpret_cast<double*>(a);
    const double* w = reinterpret_cast<const double*>(plan.w.data());
#pragma omp parallel num_threads(max_threads())
    {
#pragma omp for schedule(static)
        for (int i = 0; i < plan.n; ++i) {
            const int j = plan.rev[i];
            if (i < j) std::swap(a[i], a[j]);
        }
        for (int len = 2; len <= plan.n; len <<= 1) {
            // Butterflies within a stage touch disjoint index pairs.
            const int stride = plan.n / len;
#pragma omp for schedule(static)
            for (long u = 0; u < nb; ++u) stage_range(w, d, inverse, len, stride, u, u + 1);
        }
        if (inverse) {
            const double s = 1.0 / plan.n;
#pragma omp for schedule(static)
            for (int i = 0; i < 2 * plan.n; ++i) d[i] *= s;
        }
    }
#else
    serial::fft(plan, a, inverse);
#endif
}

void pointwise_mul(cplx* x, const cplx* m, std::size_t n) {
#ifdef _OPENMP
    double* xa = reinterpret_cast<double*>(x);
    const double* ma = reinterpret_cast<const double*>(m);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const double xr = xa[2 * i], xi = xa[2 * i + 1];
        const double mr = ma[2 * i], mi = ma[2 * i + 1];
        xa[2 * i] = xr * mr - xi * mi;
        xa[2 * i + 1] = xr * mi + xi * mr;
    }
#else
    serial::pointwise_mul(x, m, n);
#endif
}

void apply_phase(cplx* x, const double* phase, double scale, std::size_t n) {
#ifdef _OPENMP
    double* xa = reinterpret_cast<double*>(x);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const double c = std::cos(scale * phase[i]);
        const double s = std::sin(scale * phase[i]);
        const double xr = xa[2 * i], xi = xa[2 * i + 1];
        xa[2 * i] = xr * c - xi * s;
        xa[2 * i + 1] = xr * s + xi * c;
    }
#else
    serial::apply_phase(x, phase, scale, n);
#endif
}

double norm_sq(const cplx* x, std::size_t n) {
#ifdef _OPENMP
    const double* xa = reinterpret_cast<const double*>(x);
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) num_threads(max_threads())
    for (long i = 0; i < static_cast<long>(2 * n); ++i) s += xa[i] * xa[i];
    return s;
#else
    return serial::norm_sq(x, n);
#endif
}

cplx dot(const cplx* x, const cplx* y, std::size_t n) {
#ifdef _OPENMP
    const double* xa = reinterpret_cast<const double*>(x);
    const double* ya = reinterpret_cast<const double*>(y);
    double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) num_threads(max_threads())
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const double ar = xa[2 * i], ai = xa[2 * i + 1];
        const double br = ya[2 * i], bi = ya[2 * i + 1];
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
#else
    return serial::dot(x, y, n);
#endif
}

} // namespace omp

// ---- dispatch ----------------------------------------------------------------

namespace {

bool use_parallel(Exec exec, std::size_t n) {
    if (exec == Exec::Serial) return false;
    if (exec == Exec::Parallel) return true;
#ifdef _OPENMP
    if (omp_in_parallel()) return false;
#endif
    return max_threads() > 1 && n >= 16384;
}

} // namespace

void fft(const FftPlan& plan, cplx* data, bool inverse, Exec exec) {
    if (use_parallel(exec, static_cast<std::size_t>(plan.n)))
        omp::fft(plan, data, inverse);
    else
        serial::fft(plan, data, inverse);
}

void pointwise_mul(cplx* x, const cplx* m, std::size_t n, Exec exec) {
    use_parallel(exec, n) ? omp::pointwise_mul(x, m, n) : serial::pointwise_mul(x, m, n);
}

void apply_phase(cplx* x, const double* phase, double scale, std::size_t n, Exec exec) {
    use_parallel(exec, n) ? omp::apply_phase(x, phase, scale, n)
                          : serial::apply_phase(x, phase, scale, n);
}

double norm_sq(const cplx* x, std::size_t n, Exec exec) {
    return use_parallel(exec, n) ? omp::norm_sq(x, n) : serial::norm_sq(x, n);
}

cplx dot(const cplx* x, const cplx* y, std::size_t n, Exec exec) {
    return use_parallel(exec, n) ? omp::dot(x, y, n) : serial::dot(x, y, n);
}

} // namespace dynalg::kernels
