#include "spinboost/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

namespace spinboost {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw InvalidInput("gauss_legendre: need n >= 1");
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        const double wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(n - 1 - i)] = wi;
    }
    return {std::move(x), std::move(w)};
}

namespace {

// Map a [-1, 1] rule to [a, b].
void map_interval(std::vector<double>& x, std::vector<double>& w, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = half * x[i] + mid;
        w[i] *= half;
    }
}

} // namespace

QuadratureGrid::QuadratureGrid(int p_nodes, int theta_nodes, int phi_nodes, double p_max)
    : p_max_(p_max) {
    if (p_nodes < 2 || theta_nodes < 2 || phi_nodes < 2)
        throw InvalidInput("QuadratureGrid: all node counts must be >= 2");
    if (!(std::isfinite(p_max) && p_max > 0.0))
        throw InvalidInput("QuadratureGrid: p_max must be finite and > 0");

    std::tie(p_, wp_) = gauss_legendre(p_nodes);
    map_interval(p_, wp_, 0.0, p_max);

    std::tie(theta_, wtheta_) = gauss_legendre(theta_nodes);
    map_interval(theta_, wtheta_, 0.0, std::numbers::pi);

    // Uniform periodic rule: exact for e^{ik phi}, |k| < phi_nodes.
    phi_.resize(static_cast<std::size_t>(phi_nodes));
    const double step = 2.0 * std::numbers::pi / phi_nodes;
    for (int k = 0; k < phi_nodes; ++k) phi_[static_cast<std::size_t>(k)] = step * k;
    wphi_ = step;
}

QuadratureGrid QuadratureGrid::doubled() const {
    return QuadratureGrid(2 * p_nodes(), 2 * theta_nodes(), 2 * phi_nodes(), p_max_);
}

double measure_weight(const MomentumPoint& point) {
    constexpr double two_pi_cubed =
        8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;
    return point.p * point.p * std::sin(point.theta) / (two_pi_cubed * 2.0 * point.energy());
}

namespace detail {

void throw_nonfinite(double p, double theta, double phi) {
    std::ostringstream os;
    os << "integrate: non-finite integrand value at node (p=" << p << ", theta=" << theta
       << ", phi=" << phi << ")";
    throw NumericalFailure(os.str());
}

} // namespace detail

} // namespace spinboost
