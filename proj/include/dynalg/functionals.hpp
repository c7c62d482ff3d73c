#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dynalg/piecewise_poly.hpp"

namespace dynalg {

// One time profile per spatial component.
using Density = std::vector<PiecewisePoly>;

// Which constant a linear functional carries. Consistent is the default
// normalization -K(f,f)/4 under which moment-equivalent densities induce
// the same operation; Printed is the alternative +K(f,f)/2 kept for
// side-by-side falsification runs.
enum class HConvention { Consistent, Printed };

struct Moments {
    std::vector<double> a; // ∫ f
    std::vector<double> b; // ∫ t f
};

// Compactly supported deformation path with continuous value and velocity.
class LoopPath {
public:
    LoopPath() = default;
    explicit LoopPath(std::vector<PiecewisePoly> components);

    int dim() const { return static_cast<int>(components_.size()); }
    const std::vector<PiecewisePoly>& components() const { return components_; }
    const std::vector<PiecewisePoly>& velocity() const { return velocity_; }
    const std::vector<PiecewisePoly>& acceleration() const { return acceleration_; }

    bool is_zero() const;
    double value(int component, double t) const { return components_[component](t); }

    LoopPath shifted(double tau) const;
    friend LoopPath add(const LoopPath& a, const LoopPath& b);

    static LoopPath zero(int dim);

private:
    std::vector<PiecewisePoly> components_;
    std::vector<PiecewisePoly> velocity_;
    std::vector<PiecewisePoly> acceleration_;
    void finalize_and_check();
};

LoopPath add(const LoopPath& a, const LoopPath& b);

// Catalog shapes for potential terms (position dependence).
struct PolynomialShape {
    detail::Coeffs coeffs; // degree <= 4
};
struct GaussianShape {
    double amplitude = 1.0;
    double center = 0.0;
    double width = 1.0; // > 0
};
using PotentialShape = std::variant<PolynomialShape, GaussianShape>;

double shape_value(const PotentialShape& s, double x);

// One time-windowed potential: window(t) * shape(x + shift(t)).
struct PotentialTerm {
    PiecewisePoly window;
    PotentialShape shape;
    std::optional<LoopPath> shift; // one-dimensional when present
};

enum class ConstantMode { Explicit, AutoH };

// A perturbation functional: linear density part, real constant and
// windowed catalog potentials. Potential terms are supported for dim 1.
struct Functional {
    int dim = 1;
    Density density;         // size dim; all-empty means purely constant
    double constant = 0.0;
    ConstantMode constant_mode = ConstantMode::Explicit;
    std::vector<PotentialTerm> potentials;

    bool linear_sector() const { return potentials.empty(); }
    bool is_constant_only() const;
    // Union of density supports and potential windows; nullopt when empty.
    std::optional<std::pair<double, double>> support() const;

    static Functional constant_functional(double h, int dim = 1);
};

void validate_functional(const Functional& f);

// Test path on an explicit interval.
struct SampledPath {
    std::vector<PiecewisePoly> components;
    double t_lo = 0.0;
    double t_hi = 0.0;

    int dim() const { return static_cast<int>(components.size()); }
    double value(int component, double t) const { return components[component](t); }
};

// ---- exact calculus on densities ----------------------------------------

Moments moments(const Density& f);
double kernel_integral(const Density& f, const Density& g);
double h_constant(const Density& f, HConvention conv = HConvention::Consistent);
double delta_pairing(const Density& f, const Density& g);
bool moment_equivalent(const Density& f, const Density& g, double rel_tol = 1e-12);

// ---- functional constructors and algebra ---------------------------------

Functional linear_functional(const Density& f, HConvention conv = HConvention::Consistent);
Functional linear_functional_explicit(const Density& f, double constant);

Functional add(const Functional& a, const Functional& b);

// x0(t) = ∫_{-inf}^t ds (t - s) (f' - f)(s); requires matching moments.
LoopPath loop_from_difference(const Density& f, const Density& f_prime);

// Lagrangean shift induced by a loop: density -x0'' and constant
// (1/2) ∫ x0'^2, with an explicit constant.
Functional boundary_action(const LoopPath& x0);

// F^{x0}: argument shift by the loop. The linear part turns into a
// constant offset ∫ f·x0; potential terms compose their shift with x0.
Functional shift_by_loop(const Functional& f, const LoopPath& x0);

Functional time_translate(const Functional& f, double tau);

// F[x] = ∫ f·x + c + Σ_k ∫ window_k(t) shape_k(x(t) + shift_k(t)) dt.
// Polynomial terms are integrated exactly; Gaussian terms adaptively to
// 1e-10 absolute.
double evaluate(const Functional& f, const SampledPath& x);

} // namespace dynalg
