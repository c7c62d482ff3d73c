#include "dynalg/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>

#include "dynalg/errors.hpp"

namespace dynalg {

using detail::Coeffs;

PiecewisePoly::PiecewisePoly(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    normalize();
}

PiecewisePoly PiecewisePoly::from_global(double lo, double hi, const Coeffs& global_coeffs) {
    Piece p;
    p.lo = lo;
    p.hi = hi;
    p.c = detail::poly_shift_origin(global_coeffs, lo);
    return PiecewisePoly({p});
}

PiecewisePoly PiecewisePoly::constant(double lo, double hi, double value) {
    Piece p;
    p.lo = lo;
    p.hi = hi;
    p.c = {value};
    return PiecewisePoly({p});
}

void PiecewisePoly::normalize() {
    for (auto& p : pieces_) {
        if (!(p.lo == p.lo) || !(p.hi == p.hi)) throw InvalidPiecewise("NaN breakpoint");
        detail::poly_trim(p.c);
    }
    std::erase_if(pieces_, [](const Piece& p) { return !(p.hi > p.lo) || p.c.empty(); });
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        const double span = pieces_.back().hi - pieces_.front().lo;
        if (pieces_[i + 1].lo < pieces_[i].hi - 1e-12 * std::max(1.0, span))
            throw InvalidPiecewise("overlapping pieces");
        // Snap away sub-rounding gaps so half-open evaluation stays total.
        if (pieces_[i + 1].lo < pieces_[i].hi) pieces_[i + 1].lo = pieces_[i].hi;
    }
}

std::optional<std::pair<double, double>> PiecewisePoly::support() const {
    if (pieces_.empty()) return std::nullopt;
    return std::make_pair(pieces_.front().lo, pieces_.back().hi);
}

std::vector<double> PiecewisePoly::breakpoints() const {
    std::vector<double> bp;
    bp.reserve(pieces_.size() * 2);
    for (const auto& p : pieces_) {
        bp.push_back(p.lo);
        bp.push_back(p.hi);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

double PiecewisePoly::operator()(double t) const {
    // Last piece whose lo <= t.
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                               [](double v, const Piece& p) { return v < p.lo; });
    if (it == pieces_.begin()) return 0.0;
    const Piece& p = *std::prev(it);
    if (t >= p.hi) return 0.0;
    return detail::poly_eval(p.c, t - p.lo);
}

double PiecewisePoly::integral() const {
    double v = 0.0;
    for (const auto& p : pieces_) v += detail::poly_integral(p.c, p.hi - p.lo);
    return v;
}

double PiecewisePoly::moment(unsigned k) const {
    if (k == 0) return integral();
    double v = 0.0;
    for (const auto& p : pieces_) {
        const Coeffs w = detail::poly_linear_power(p.lo, k); // t^k = (lo + u)^k
        v += detail::poly_integral(detail::poly_mul(w, p.c), p.hi - p.lo);
    }
    return v;
}

PiecewisePoly PiecewisePoly::derivative() const {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({p.lo, p.hi, detail::poly_derivative(p.c)});
    return PiecewisePoly(std::move(out));
}

PiecewisePoly PiecewisePoly::scaled(double s) const {
    if (s == 0.0) return {};
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({p.lo, p.hi, detail::poly_scale(p.c, s)});
    return PiecewisePoly(std::move(out));
}

PiecewisePoly PiecewisePoly::shifted(double tau) const {
    // Local coefficients are origin-relative, so a time translation moves
    // only the breakpoints. Kernel and moment-free quantities are then
    // translation invariant to the last bit.
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({p.lo + tau, p.hi + tau, p.c});
    return PiecewisePoly(std::move(out));
}

Coeffs PiecewisePoly::global_coeffs(const Piece& p) {
    return detail::poly_shift_origin(p.c, -p.lo);
}

double PiecewisePoly::value_bound() const {
    double m = 0.0;
    for (const auto& p : pieces_) {
        const double w = std::max(1.0, p.hi - p.lo);
        double s = 0.0, wk = 1.0;
        for (double c : p.c) {
            s += std::abs(c) * wk;
            wk *= w;
        }
        m = std::max(m, s);
    }
    return m;
}

namespace {

// Coefficients of piece p about the point a (which must lie in [lo, hi]).
Coeffs local_at(const PiecewisePoly::Piece& p, double a) {
    return detail::poly_shift_origin(p.c, a - p.lo);
}

// Merge the breakpoints of both operands over the union of supports.
std::vector<double> merged_edges(const PiecewisePoly& a, const PiecewisePoly& b) {
    std::vector<double> e = a.breakpoints();
    const std::vector<double> e2 = b.breakpoints();
    e.insert(e.end(), e2.begin(), e2.end());
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

const PiecewisePoly::Piece* covering_piece(const PiecewisePoly& p, double lo, double hi) {
    const double mid = lo + 0.5 * (hi - lo);
    for (const auto& pc : p.pieces())
        if (pc.lo <= mid && mid < pc.hi) return &pc;
    return nullptr;
}

} // namespace

PiecewisePoly add(const PiecewisePoly& a, const PiecewisePoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<PiecewisePoly::Piece> out;
    const std::vector<double> edges = merged_edges(a, b);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i], hi = edges[i + 1];
        const auto* pa = covering_piece(a, lo, hi);
        const auto* pb = covering_piece(b, lo, hi);
        if (!pa && !pb) continue;
        Coeffs c;
        if (pa) c = local_at(*pa, lo);
        if (pb) c = detail::poly_add(c, local_at(*pb, lo));
        out.push_back({lo, hi, std::move(c)});
    }
    return PiecewisePoly(std::move(out));
}

PiecewisePoly multiply(const PiecewisePoly& a, const PiecewisePoly& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<PiecewisePoly::Piece> out;
    const std::vector<double> edges = merged_edges(a, b);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i], hi = edges[i + 1];
        const auto* pa = covering_piece(a, lo, hi);
        const auto* pb = covering_piece(b, lo, hi);
        if (!pa || !pb) continue;
        out.push_back({lo, hi, detail::poly_mul(local_at(*pa, lo), local_at(*pb, lo))});
    }
    return PiecewisePoly(std::move(out));
}

namespace {

// ∫ over [a, b] of t^k * piece polynomial, piece covering [a, b].
double moment_over(const PiecewisePoly::Piece& p, double a, double b, unsigned k) {
    const Coeffs c = local_at(p, a);
    if (k == 0) return detail::poly_integral(c, b - a);
    const Coeffs w = detail::poly_linear_power(a, k);
    return detail::poly_integral(detail::poly_mul(w, c), b - a);
}

// Ordered rectangle [pa,pb] x [qa,qb] with the q-interval entirely at or
// after the p-interval: |s - s'| = s' - s there.
double ordered_rect(const PiecewisePoly::Piece& P, double pa, double pb,
                    const PiecewisePoly::Piece& Q, double qa, double qb) {
    const double m0p = moment_over(P, pa, pb, 0);
    const double m1p = moment_over(P, pa, pb, 1);
    const double m0q = moment_over(Q, qa, qb, 0);
    const double m1q = moment_over(Q, qa, qb, 1);
    return m0p * m1q - m1p * m0q;
}

// Square [a,b]^2 cut by the diagonal: both triangles in closed form.
double diagonal_square(const PiecewisePoly::Piece& P, const PiecewisePoly::Piece& Q,
                       double a, double b) {
    const Coeffs pl = local_at(P, a);
    const Coeffs ql = local_at(Q, a);
    const double w = b - a;

    auto triangle = [a, w](const Coeffs& outer, const Coeffs& inner) {
        // ∫_a^b ds outer(s) ∫_a^s ds' (s - s') inner(s'), all about a.
        const Coeffs i1 = detail::poly_antiderivative(inner);
        const Coeffs i2 = detail::poly_antiderivative(detail::poly_mul_linear(inner, a));
        // s * I1(s) - I2(s) with s = a + u.
        const Coeffs kern =
            detail::poly_add(detail::poly_mul_linear(i1, a), detail::poly_scale(i2, -1.0));
        return detail::poly_integral(detail::poly_mul(outer, kern), w);
    };

    return triangle(pl, ql) + triangle(ql, pl);
}

} // namespace

double kernel_abs(const PiecewisePoly& p, const PiecewisePoly& q) {
    double total = 0.0;
    for (const auto& P : p.pieces()) {
        for (const auto& Q : q.pieces()) {
            if (P.hi <= Q.lo) {
                total += ordered_rect(P, P.lo, P.hi, Q, Q.lo, Q.hi);
            } else if (Q.hi <= P.lo) {
                total += ordered_rect(Q, Q.lo, Q.hi, P, P.lo, P.hi);
            } else {
                const double a = std::max(P.lo, Q.lo);
                const double b = std::min(P.hi, Q.hi);
                // Axis cuts at a and b leave one diagonal cell; all other
                // cells see a single-signed kernel.
                const double pcuts[3][2] = {{P.lo, a}, {a, b}, {b, P.hi}};
                const double qcuts[3][2] = {{Q.lo, a}, {a, b}, {b, Q.hi}};
                for (const auto& pc : pcuts) {
                    if (!(pc[1] > pc[0])) continue;
                    for (const auto& qc : qcuts) {
                        if (!(qc[1] > qc[0])) continue;
                        if (pc[0] == a && pc[1] == b && qc[0] == a && qc[1] == b)
                            total += diagonal_square(P, Q, a, b);
                        else if (pc[1] <= qc[0])
                            total += ordered_rect(P, pc[0], pc[1], Q, qc[0], qc[1]);
                        else
                            total += ordered_rect(Q, qc[0], qc[1], P, pc[0], pc[1]);
                    }
                }
            }
        }
    }
    return total;
}

double kernel_delta(const PiecewisePoly& p, const PiecewisePoly& q) {
    double total = 0.0;
    for (const auto& P : p.pieces())
        for (const auto& Q : q.pieces())
            total += moment_over(P, P.lo, P.hi, 0) * moment_over(Q, Q.lo, Q.hi, 1) -
                     moment_over(P, P.lo, P.hi, 1) * moment_over(Q, Q.lo, Q.hi, 0);
    return total;
}

CumulativeIntegral::CumulativeIntegral(const PiecewisePoly& p) {
    double acc = 0.0;
    for (const auto& pc : p.pieces()) {
        Node n;
        n.lo = pc.lo;
        n.hi = pc.hi;
        n.offset = acc;
        n.a = detail::poly_antiderivative(pc.c);
        acc += detail::poly_eval(n.a, pc.hi - pc.lo);
        nodes_.push_back(std::move(n));
    }
    total_ = acc;
}

double CumulativeIntegral::operator()(double t) const {
    if (nodes_.empty()) return 0.0;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                               [](double v, const Node& n) { return v < n.lo; });
    if (it == nodes_.begin()) return 0.0;
    const Node& n = *std::prev(it);
    if (t >= n.hi) {
        // Constant in the gap: value at the end of the previous piece.
        return n.offset + detail::poly_eval(n.a, n.hi - n.lo);
    }
    return n.offset + detail::poly_eval(n.a, t - n.lo);
}

} // namespace dynalg
