#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dynalg::kernels {

using cplx = std::complex<double>;

// Radix-2 plan: bit-reversal table and the first half of the unit roots
// w[k] = exp(-2 pi i k / n).
struct FftPlan {
    int n = 0;
    std::vector<int> rev;
    std::vector<cplx> w;
    explicit FftPlan(int n);
};

enum class Exec { Serial, Parallel, Auto };

// Thread budget: min(DYNALG_THREADS, OpenMP max), at least 1.
int max_threads();

// The serial implementations are the reference: simple loop nests with a
// fixed summation order. The omp variants must agree with them bitwise
// for permutation/butterfly work and to rounding for reductions; the
// benchmark target compares their throughput.
namespace serial {
void fft(const FftPlan& plan, cplx* data, bool inverse);
void pointwise_mul(cplx* x, const cplx* m, std::size_t n);
void apply_phase(cplx* x, const double* phase, double scale, std::size_t n);
double norm_sq(const cplx* x, std::size_t n);
cplx dot(const cplx* x, const cplx* y, std::size_t n); // conj(x)·y
} // namespace serial

namespace omp {
void fft(const FftPlan& plan, cplx* data, bool inverse);
void pointwise_mul(cplx* x, const cplx* m, std::size_t n);
void apply_phase(cplx* x, const double* phase, double scale, std::size_t n);
double norm_sq(const cplx* x, std::size_t n);
cplx dot(const cplx* x, const cplx* y, std::size_t n);
} // namespace omp

// Dispatchers. Auto picks omp only when a parallel region is worthwhile
// and we are not already inside one; Serial is always bit-stable.
void fft(const FftPlan& plan, cplx* data, bool inverse, Exec exec = Exec::Auto);
void pointwise_mul(cplx* x, const cplx* m, std::size_t n, Exec exec = Exec::Auto);
void apply_phase(cplx* x, const double* phase, double scale, std::size_t n,
                 Exec exec = Exec::Auto);
double norm_sq(const cplx* x, std::size_t n, Exec exec = Exec::Auto);
cplx dot(const cplx* x, const cplx* y, std::size_t n, Exec exec = Exec::Auto);

} // namespace dynalg::kernels
