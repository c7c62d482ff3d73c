#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace dynalg {

// Gauss-Legendre rule on [-1, 1]; nodes/weights computed once per order
// by Newton iteration and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

// ∫_a^b f with an order-point Gauss rule (exact for polynomial degree
// 2*order - 1).
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order);

// Adaptive Simpson with absolute tolerance; integrand assumed smooth on
// [a, b].
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

} // namespace dynalg
