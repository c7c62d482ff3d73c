#include "dynalg/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dynalg/errors.hpp"

namespace dynalg {

Grid::Grid(int n, double x_min, double length)
    : n_(n), x_min_(x_min), length_(length), plan_(n) {
    if (!(length > 0.0)) throw std::invalid_argument("Grid: length must be positive");
    xs_.resize(n_);
    ks_.resize(n_);
    const double dk = 2.0 * std::numbers::pi / length_;
    for (int j = 0; j < n_; ++j) {
        xs_[j] = x_min_ + j * dx();
        const int jj = j < n_ / 2 ? j : j - n_;
        ks_[j] = dk * jj;
    }
}

std::shared_ptr<const Grid> Grid::make(int n, double x_min, double length) {
    return std::make_shared<const Grid>(n, x_min, length);
}

double WaveState::norm(kernels::Exec exec) const {
    return std::sqrt(grid->dx() * kernels::norm_sq(amp.data(), amp.size(), exec));
}

std::complex<double> inner(const WaveState& u, const WaveState& v, kernels::Exec exec) {
    if (!u.grid->same(*v.grid)) throw DimensionMismatch("inner: states on different grids");
    return u.grid->dx() * kernels::dot(u.amp.data(), v.amp.data(), u.amp.size(), exec);
}

double distance(const WaveState& u, const WaveState& v) {
    if (!u.grid->same(*v.grid)) throw DimensionMismatch("distance: states on different grids");
    double s = 0.0;
    for (std::size_t i = 0; i < u.amp.size(); ++i) s += std::norm(u.amp[i] - v.amp[i]);
    return std::sqrt(u.grid->dx() * s);
}

double relative_phase(const WaveState& reference, const WaveState& state) {
    return std::arg(inner(reference, state));
}

double expectation_x(const WaveState& u) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.amp.size(); ++i) s += u.grid->xs()[i] * std::norm(u.amp[i]);
    return s * u.grid->dx();
}

double expectation_x_sq(const WaveState& u) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.amp.size(); ++i) {
        const double x = u.grid->xs()[i];
        s += x * x * std::norm(u.amp[i]);
    }
    return s * u.grid->dx();
}

} // namespace dynalg
