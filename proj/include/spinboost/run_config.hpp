#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "spinboost/reduced_states.hpp"

namespace spinboost {

// All knobs of an experiment run. Defaults are the discrimination-experiment
// parameter set: eps = 0.1, m = 1, sigma_up/down/plus/minus = 2/4/3/6.
struct RunConfig {
    double mass = 1.0;
    double epsilon = 0.1;
    double sigma_up = 2.0;
    double sigma_down = 4.0;
    double sigma_plus = 3.0;
    double sigma_minus = 6.0;
    double deform_phase = kDeformationPhaseDefault;

    double zeta = 1.0; // single-boost commands
    double zeta_min = 0.0;
    double zeta_max = 3.0;
    int zeta_steps = 31;

    int p_nodes = 64;
    int theta_nodes = 64;
    int phi_nodes = 32;
    double p_max = 0.0; // 0 = auto: mass + 8 * max sigma

    std::array<double, 4> priors{0.25, 0.25, 0.25, 0.25};
    double tol = 1e-6;
    std::uint64_t seed = 12345;
    std::string out;

    // Throws InvalidInput naming the offending field.
    void validate() const;

    double resolved_p_max() const;
    QuadratureGrid make_grid() const;
    double sigma(SpinLabel label) const;
};

} // namespace spinboost
