#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dynalg/detail/poly.hpp"

namespace dynalg {

// Compactly supported piecewise polynomial of time. Pieces are half-open
// intervals [lo, hi); evaluation outside every piece is exactly 0.
// Coefficients are stored in the piece-local variable u = t - lo.
class PiecewisePoly {
public:
    struct Piece {
        double lo = 0.0;
        double hi = 0.0;
        detail::Coeffs c; // value sum_k c[k] (t - lo)^k
    };

    PiecewisePoly() = default;
    explicit PiecewisePoly(std::vector<Piece> pieces);

    // Piece with coefficients given in the global variable t (the JSON
    // wire form); converted to the local representation on entry.
    static PiecewisePoly from_global(double lo, double hi, const detail::Coeffs& global_coeffs);
    static PiecewisePoly constant(double lo, double hi, double value);

    bool empty() const { return pieces_.empty(); }
    bool is_zero() const { return pieces_.empty(); }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // Support interval [lo, hi); nullopt when identically zero.
    std::optional<std::pair<double, double>> support() const;

    // All piece edges, sorted, deduplicated.
    std::vector<double> breakpoints() const;

    double operator()(double t) const;

    double integral() const;          // ∫ p
    double moment(unsigned k) const;  // ∫ t^k p

    PiecewisePoly derivative() const;
    PiecewisePoly scaled(double s) const;
    PiecewisePoly shifted(double tau) const; // t -> p(t - tau)

    // Coefficients of one piece in the global variable (serialization).
    static detail::Coeffs global_coeffs(const Piece& p);

    // An upper bound for |p| on its support; the natural scale for
    // tolerance decisions.
    double value_bound() const;

    friend PiecewisePoly add(const PiecewisePoly& a, const PiecewisePoly& b);
    friend PiecewisePoly multiply(const PiecewisePoly& a, const PiecewisePoly& b);

private:
    std::vector<Piece> pieces_; // sorted, disjoint, nonempty, nonzero
    void normalize();
};

PiecewisePoly add(const PiecewisePoly& a, const PiecewisePoly& b);
PiecewisePoly multiply(const PiecewisePoly& a, const PiecewisePoly& b);

inline double integral_product(const PiecewisePoly& a, const PiecewisePoly& b) {
    return multiply(a, b).integral();
}

// ∬ ds ds' |s - s'| p(s) q(s'), exact: disjoint piece pairs reduce to
// moments, overlapping pairs are split along the diagonal where the
// kernel has its kink.
double kernel_abs(const PiecewisePoly& p, const PiecewisePoly& q);

// ∬ ds ds' p(s) (s' - s) q(s'), exact piece-pair sum.
double kernel_delta(const PiecewisePoly& p, const PiecewisePoly& q);

// Running integral t -> ∫_{-inf}^t p, evaluable anywhere (constant in the
// gaps between pieces and beyond the support).
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    explicit CumulativeIntegral(const PiecewisePoly& p);
    double operator()(double t) const;
    double total() const { return total_; }

private:
    struct Node {
        double lo, hi;
        double offset;    // value at lo
        detail::Coeffs a; // local antiderivative, zero at lo
    };
    std::vector<Node> nodes_;
    double total_ = 0.0;
};

} // namespace dynalg
