#pragma once

#include "dynalg/functionals.hpp"
#include "dynalg/grid.hpp"

namespace dynalg {

enum class Scheme { Strang, Trotter1 };

// S4: H(t) = H0 - V_t, so a perturbation F generates the positive-phase
// time-ordered exponential and constant functionals the phase e^{+ic}.
// S2 flips the potential sign; it is kept for falsification runs.
enum class SignConvention { S4, S2 };

struct PropagatorConfig {
    double t_i = 0.0;
    double t_f = 0.0;
    double dt = 1e-3;
    Scheme scheme = Scheme::Strang;
    SignConvention sign = SignConvention::S4;
    double tail_threshold = 1e-8;
    bool monitor_tails = true;
    kernels::Exec exec = kernels::Exec::Auto;
};

// Window with an integral number of steps, padded outward around a
// support interval.
PropagatorConfig make_window(double support_lo, double support_hi, double dt,
                             Scheme scheme = Scheme::Strang,
                             SignConvention sign = SignConvention::S4, double pad = 0.5);

// Minimal-uncertainty packet: <x^2> = <p^2> = 1/2 at this width.
inline constexpr double kReferenceWidth = 0.7071067811865476;

// Normalized Gaussian exp(-(x - x0)^2 / (4 width^2) + i p0 x). Throws
// TailOverflow when either the position or the momentum tail does not
// clear the grid boundary at the 1e-14 level.
WaveState coherent_state(std::shared_ptr<const Grid> grid, double x_center, double p_center,
                         double width = kReferenceWidth);

// e^{-i t H0} with H0 = P^2/2, exact on the grid.
WaveState free_evolve(const WaveState& in, double t,
                      kernels::Exec exec = kernels::Exec::Auto);

// e^{i theta} e^{i (a Q + b P)}: Fourier translation by b followed by the
// position phase e^{i a x + i a b / 2}.
WaveState weyl_apply(const WaveState& in, double a, double b, double theta,
                     double tail_threshold = 1e-8,
                     kernels::Exec exec = kernels::Exec::Auto);

// Propagator for H(t) = H0 -+ V_t(Q) over [t_i, t_f]; the constant part
// of F enters as a global phase at the end.
WaveState evolve(const WaveState& in, const Functional& f, const PropagatorConfig& cfg);

// S(F) = e^{i t_f H0} U_F(t_f, t_i) e^{-i t_i H0}.
WaveState scattering(const WaveState& in, const Functional& f, const PropagatorConfig& cfg);

// Exact inverse of the discrete scattering map (adjoint stepping).
WaveState scattering_inverse(const WaveState& in, const Functional& f,
                             const PropagatorConfig& cfg);

} // namespace dynalg
