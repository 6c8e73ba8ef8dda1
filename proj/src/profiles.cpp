#include "spinboost/profiles.hpp"

#include <cmath>
#include <sstream>

#include "spinboost/errors.hpp"

namespace spinboost {

Profile::Profile(ProfileKind kind, double sigma, double epsilon, double phase)
    : kind_(kind), sigma_(sigma), epsilon_(epsilon), phase_(phase) {
    if (!(std::isfinite(sigma) && sigma > 0.0))
        throw InvalidInput("Profile: sigma must be finite and > 0, got " + std::to_string(sigma));
    // epsilon < 1 keeps 1 + eps cos(phi - phase) positive, so the square root
    // stays real.
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw InvalidInput("Profile: epsilon must be in [0, 1), got " + std::to_string(epsilon));
    if (!std::isfinite(phase)) throw InvalidInput("Profile: phase must be finite");
}

Profile Profile::spherical_gaussian(double sigma) {
    return Profile(ProfileKind::spherical_gaussian, sigma, 0.0, 0.0);
}

Profile Profile::deformed_gaussian(double sigma, double epsilon, double phase) {
    return Profile(ProfileKind::deformed_gaussian, sigma, epsilon, phase);
}

double Profile::norm() const {
    if (!normalized()) throw UnnormalizedProfile("Profile: normalization constant not set");
    return norm_;
}

Profile Profile::with_norm(double n) const {
    if (!(std::isfinite(n) && n > 0.0))
        throw InvalidInput("Profile::with_norm: N must be finite and > 0");
    Profile p = *this;
    p.norm_ = n;
    return p;
}

double eval_profile(const Profile& profile, const MomentumPoint& point) {
    const double n = profile.norm(); // throws if unnormalized
    const double s = profile.sigma();
    double value = n * std::exp(-point.p * point.p / (2.0 * s * s));
    if (profile.kind() == ProfileKind::deformed_gaussian)
        value *= std::sqrt(1.0 + profile.epsilon() * std::cos(point.phi - profile.phase()));
    return value;
}

Profile normalize_profile(const Profile& profile, const QuadratureGrid& grid, double mass,
                          double check_tol) {
    const Profile unit = profile.with_norm(1.0);
    auto density = [&unit](const MomentumPoint& pt) {
        const double v = eval_profile(unit, pt);
        return v * v;
    };
    const double base = integrate_real(density, grid, mass);
    const double fine = integrate_real(density, grid.doubled(), mass);
    const double change = std::abs(fine - base) / std::max(std::abs(fine), 1e-300);
    if (!(base > 0.0) || change > check_tol) {
        std::ostringstream os;
        os << "normalize_profile: normalization integral not converged on this grid "
           << "(relative change " << change << " between grid and doubled grid, tol " << check_tol
           << "); increase node counts or p_max";
        throw NumericalFailure(os.str());
    }
    return profile.with_norm(1.0 / std::sqrt(base));
}

} // namespace spinboost
