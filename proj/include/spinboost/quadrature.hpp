#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spinboost/errors.hpp"
#include "spinboost/kinematics.hpp"
#include "spinboost/mat2.hpp"

namespace spinboost {

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// Legendre recurrence.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// Tensor-product rule over momentum space in spherical coordinates:
//  - radial: Gauss-Legendre mapped to [0, p_max]
//  - polar:  Gauss-Legendre on [0, pi] in theta (not in cos theta)
//  - azimuthal: uniform periodic rule, exact for harmonics e^{ik phi},
//    |k| < phi_nodes. This makes the azimuthal cancellations exact rather
//    than approximate.
class QuadratureGrid {
public:
    QuadratureGrid(int p_nodes, int theta_nodes, int phi_nodes, double p_max);

    int p_nodes() const { return static_cast<int>(p_.size()); }
    int theta_nodes() const { return static_cast<int>(theta_.size()); }
    int phi_nodes() const { return static_cast<int>(phi_.size()); }
    double p_max() const { return p_max_; }

    const std::vector<double>& radial() const { return p_; }
    const std::vector<double>& radial_w() const { return wp_; }
    const std::vector<double>& polar() const { return theta_; }
    const std::vector<double>& polar_w() const { return wtheta_; }
    const std::vector<double>& azimuthal() const { return phi_; }
    double azimuthal_w() const { return wphi_; }

    QuadratureGrid doubled() const;

private:
    std::vector<double> p_, wp_;
    std::vector<double> theta_, wtheta_;
    std::vector<double> phi_;
    double wphi_;
    double p_max_;
};

// Density of the Lorentz-invariant measure in spherical coordinates,
// p^2 sin(theta) / ((2 pi)^3 2 E), so that
// integral f dmu = triple-sum f * measure_weight * w_p w_theta w_phi.
double measure_weight(const MomentumPoint& point);

namespace detail {

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
inline bool finite(const Mat2& v) {
    for (const auto& x : v.e)
        if (!finite(x)) return false;
    return true;
}
// Custom accumulator types provide their own member check.
template <typename T>
bool finite(const T& v) {
    return v.finite();
}

[[noreturn]] void throw_nonfinite(double p, double theta, double phi);

} // namespace detail

// Deterministic tensor-product quadrature of f over momentum space with the
// invariant measure folded in. Fixed summation order: phi innermost, then
// theta, then p. T is double, cplx or Mat2.
template <typename T, typename F>
T integrate(F&& f, const QuadratureGrid& grid, double mass) {
    T acc{};
    const auto& pn = grid.radial();
    const auto& pw = grid.radial_w();
    const auto& tn = grid.polar();
    const auto& tw = grid.polar_w();
    const auto& phin = grid.azimuthal();
    const double phiw = grid.azimuthal_w();
    for (std::size_t ip = 0; ip < pn.size(); ++ip) {
        for (std::size_t it = 0; it < tn.size(); ++it) {
            for (std::size_t iph = 0; iph < phin.size(); ++iph) {
                const MomentumPoint pt(pn[ip], tn[it], phin[iph], mass);
                const double w = measure_weight(pt) * pw[ip] * tw[it] * phiw;
                T val = f(pt);
                if (!detail::finite(val)) detail::throw_nonfinite(pt.p, pt.theta, pt.phi);
                acc += val * w;
            }
        }
    }
    return acc;
}

template <typename F>
cplx integrate_complex(F&& f, const QuadratureGrid& grid, double mass) {
    return integrate<cplx>(std::forward<F>(f), grid, mass);
}

template <typename F>
double integrate_real(F&& f, const QuadratureGrid& grid, double mass) {
    return integrate<double>(std::forward<F>(f), grid, mass);
}

// Relative change of the integral between `grid` and the grid with all node
// counts doubled: |I_2x - I_1x| / max(|I_2x|, floor).
template <typename F>
double convergence_check(F&& f, const QuadratureGrid& grid, double mass) {
    const cplx base = integrate<cplx>(f, grid, mass);
    const cplx fine = integrate<cplx>(f, grid.doubled(), mass);
    return std::abs(fine - base) / std::max(std::abs(fine), 1e-300);
}

} // namespace spinboost
