#include "spinboost/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinboost/errors.hpp"

namespace spinboost {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// cosh/sinh from paired exponentials; expm1 keeps sinh accurate near zero
// and makes zeta = 0 land exactly on (1, 0).
struct HyperbolicPair {
    double ch;
    double sh;
};

HyperbolicPair cosh_sinh(double x) {
    const double ep = std::expm1(x);
    const double em = std::expm1(-x);
    return {1.0 + 0.5 * (ep + em), 0.5 * (ep - em)};
}

} // namespace

MomentumPoint::MomentumPoint(double p_, double theta_, double phi_, double m_)
    : p(p_), theta(theta_), phi(phi_), m(m_) {
    if (!(std::isfinite(p) && p >= 0.0))
        throw InvalidInput("MomentumPoint: p must be finite and >= 0, got " + std::to_string(p));
    if (!(std::isfinite(m) && m > 0.0))
        throw InvalidInput("MomentumPoint: m must be finite and > 0, got " + std::to_string(m));
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw InvalidInput("MomentumPoint: theta out of [0, pi], got " + std::to_string(theta));
    if (!(phi >= 0.0 && phi < kTwoPi))
        throw InvalidInput("MomentumPoint: phi out of [0, 2pi), got " + std::to_string(phi));
}

double MomentumPoint::energy() const { return spinboost::energy(p, m); }

Rapidity::Rapidity(double zeta) : zeta_(zeta) {
    if (!std::isfinite(zeta_) || std::abs(zeta_) > kMaxRapidity)
        throw InvalidInput("Rapidity: |zeta| must be finite and <= " +
                           std::to_string(kMaxRapidity) + ", got " + std::to_string(zeta));
}

Mat2 WignerHalf::matrix() const {
    const cplx phase(std::cos(phi), std::sin(phi));
    return Mat2::from_rows(cplx(alpha, 0.0), beta * std::conj(phase), -beta * phase,
                           cplx(alpha, 0.0));
}

double energy(double p, double m) {
    if (!(std::isfinite(p) && p >= 0.0))
        throw InvalidInput("energy: p must be finite and >= 0, got " + std::to_string(p));
    if (!(std::isfinite(m) && m > 0.0))
        throw InvalidInput("energy: m must be finite and > 0, got " + std::to_string(m));
    return std::hypot(p, m);
}

double boosted_energy(const MomentumPoint& point, Rapidity zeta) {
    const auto [ch, sh] = cosh_sinh(zeta.value());
    return point.energy() * ch + point.p * std::cos(point.theta) * sh;
}

WignerHalf wigner_half(const MomentumPoint& point, Rapidity zeta) {
    const double e = point.energy();
    const double ep = boosted_energy(point, zeta);
    const double em = e + point.m;  // E + m  > 0
    const double epm = ep + point.m; // E' + m > 0 (timelike preservation)
    const auto [ch2, sh2] = cosh_sinh(0.5 * zeta.value());
    const double alpha = std::sqrt(em / epm) * (ch2 + point.p * std::cos(point.theta) / em * sh2);
    const double beta = point.p * std::sin(point.theta) * sh2 / std::sqrt(em * epm);
    return WignerHalf{alpha, beta, point.phi};
}

} // namespace spinboost
