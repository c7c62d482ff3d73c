#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "dynalg/kernels.hpp"

namespace dynalg {

// Periodic uniform position grid [x_min, x_min + length) with its
// momentum lattice; the discrete Fourier pair on it is unitary.
class Grid {
public:
    Grid(int n, double x_min, double length);

    static std::shared_ptr<const Grid> make(int n = 2048, double x_min = -20.0,
                                            double length = 40.0);

    int n() const { return n_; }
    double x_min() const { return x_min_; }
    double length() const { return length_; }
    double dx() const { return length_ / n_; }

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ks() const { return ks_; }
    const kernels::FftPlan& plan() const { return plan_; }

    bool same(const Grid& other) const {
        return n_ == other.n_ && x_min_ == other.x_min_ && length_ == other.length_;
    }

private:
    int n_;
    double x_min_, length_;
    std::vector<double> xs_, ks_;
    kernels::FftPlan plan_;
};

// Complex wavefunction samples on a grid; unit grid-weighted l2 norm by
// construction, immutable from the outside.
struct WaveState {
    std::shared_ptr<const Grid> grid;
    std::vector<std::complex<double>> amp;

    double norm(kernels::Exec exec = kernels::Exec::Auto) const;
};

std::complex<double> inner(const WaveState& u, const WaveState& v,
                           kernels::Exec exec = kernels::Exec::Auto);
double distance(const WaveState& u, const WaveState& v);

// arg <reference | state>; the phase of state relative to the reference.
double relative_phase(const WaveState& reference, const WaveState& state);

double expectation_x(const WaveState& u);
double expectation_x_sq(const WaveState& u);

} // namespace dynalg
