#pragma once

#include <complex>
#include <vector>

#include "dynalg/functionals.hpp"

namespace dynalg {

// Principal phase representative in (-pi, pi].
double wrap_phase(double theta);

// Canonical form of a linear-sector group element,
// e^{i theta} exp(i (a·Q + b·Qdot)).
struct WeylElement {
    double theta = 0.0;
    std::vector<double> a;
    std::vector<double> b;

    int dim() const { return static_cast<int>(a.size()); }
    static WeylElement identity(int dim);
};

bool approx_equal(const WeylElement& u, const WeylElement& v, double tol = 1e-12);

// Canonical form of a potential-free functional. The phase is the
// functional's constant relative to the reference normalization of the
// given convention; auto-built functionals come out with theta = 0.
WeylElement weyl_of(const Functional& f, HConvention conv = HConvention::Consistent);

// Operator product u (then) v acting right-to-left, with the symplectic
// cocycle -(a_u·b_v - b_u·a_v)/2 folded into the phase.
WeylElement multiply(const WeylElement& u, const WeylElement& v);

WeylElement inverse(const WeylElement& w);

// Phase of the group commutator u v u^{-1} v^{-1}.
double group_commutator(const WeylElement& u, const WeylElement& v);

// Extract [Q_k, Qdot_l] from group-commutator phases of epsilon-sized
// generators; equals i * delta_{kl} up to rounding for every epsilon.
std::vector<std::vector<std::complex<double>>> recover_commutators(double eps, int dim = 1);

// A finite product of scattering symbols. Factors are listed in the
// order the operations are performed, so the word [w0, w1, ...] denotes
// the operator ... W1 W0 together with a central phase prefactor.
struct GroupWord {
    struct Factor {
        Functional functional;
        int exponent = 1; // +1 or -1
    };
    double prefactor = 0.0;
    std::vector<Factor> factors;
};

// Fold a linear-sector word to its canonical form. Throws NotLinearSector
// if any factor carries potential terms.
WeylElement normalize(const GroupWord& word, HConvention conv = HConvention::Consistent);

} // namespace dynalg
