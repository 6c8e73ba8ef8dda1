#include "spinboost/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinboost/errors.hpp"

namespace spinboost {

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw InvalidInput("config: " + field + " " + what);
}

} // namespace

void RunConfig::validate() const {
    require(std::isfinite(mass) && mass > 0.0, "mass", "must be > 0");
    require(epsilon >= 0.0 && epsilon < 1.0, "epsilon", "must be in [0, 1)");
    require(std::isfinite(sigma_up) && sigma_up > 0.0, "sigma-up", "must be > 0");
    require(std::isfinite(sigma_down) && sigma_down > 0.0, "sigma-down", "must be > 0");
    require(std::isfinite(sigma_plus) && sigma_plus > 0.0, "sigma-plus", "must be > 0");
    require(std::isfinite(sigma_minus) && sigma_minus > 0.0, "sigma-minus", "must be > 0");
    require(std::isfinite(deform_phase), "deform-phase", "must be finite");
    require(std::isfinite(zeta) && std::abs(zeta) <= kMaxRapidity, "zeta",
            "must satisfy |zeta| <= " + std::to_string(kMaxRapidity));
    require(std::isfinite(zeta_min) && std::isfinite(zeta_max) && zeta_min <= zeta_max,
            "zeta-min/zeta-max", "must be finite with zeta-min <= zeta-max");
    require(std::abs(zeta_min) <= kMaxRapidity && std::abs(zeta_max) <= kMaxRapidity,
            "zeta-min/zeta-max", "must lie within the supported rapidity range");
    require(zeta_steps >= 1, "zeta-steps", "must be >= 1");
    require(p_nodes >= 2, "p-nodes", "must be >= 2");
    require(theta_nodes >= 2, "theta-nodes", "must be >= 2");
    require(phi_nodes >= 2, "phi-nodes", "must be >= 2");
    require(p_max == 0.0 || (std::isfinite(p_max) && p_max > 0.0), "p-max",
            "must be > 0 (or 0 for automatic)");
    double prior_sum = 0.0;
    for (double p : priors) {
        require(std::isfinite(p) && p >= 0.0, "priors", "must be nonnegative");
        prior_sum += p;
    }
    require(std::abs(prior_sum - 1.0) <= 1e-12, "priors", "must sum to 1");
    require(std::isfinite(tol) && tol > 0.0, "tol", "must be > 0");
}

double RunConfig::resolved_p_max() const {
    if (p_max > 0.0) return p_max;
    const double widest = std::max({sigma_up, sigma_down, sigma_plus, sigma_minus});
    // Gaussian tails beyond 8 sigma contribute < 1e-14 relatively.
    return mass + 8.0 * widest;
}

QuadratureGrid RunConfig::make_grid() const {
    return QuadratureGrid(p_nodes, theta_nodes, phi_nodes, resolved_p_max());
}

double RunConfig::sigma(SpinLabel label) const {
    switch (label) {
    case SpinLabel::up: return sigma_up;
    case SpinLabel::down: return sigma_down;
    case SpinLabel::plus: return sigma_plus;
    case SpinLabel::minus: return sigma_minus;
    }
    throw InvalidInput("config: unknown spin label");
}

} // namespace spinboost
