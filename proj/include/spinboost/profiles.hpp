#pragma once

#include <numbers>

#include "spinboost/kinematics.hpp"
#include "spinboost/quadrature.hpp"

namespace spinboost {

enum class ProfileKind { spherical_gaussian, deformed_gaussian };

// Azimuthal phase of the deformation, the single switch point for the
// deformation direction. With zero offset (a pure cos phi bump) every
// z-boosted reduced spin matrix of the canonical state family comes out
// real-valued, so the family spans at most three dimensions and no dual
// frame exists. The quarter-period offset turns the first azimuthal harmonic
// imaginary relative to the x-axis spin states, which is what lets a boost
// produce four independent states.
inline constexpr double kDeformationPhaseDefault = std::numbers::pi / 2.0;

// Real momentum-space wavefunction profile:
//   spherical_gaussian: N exp(-p^2 / (2 sigma^2))
//   deformed_gaussian:  N exp(-p^2 / (2 sigma^2)) sqrt(1 + eps cos(phi - phase))
// The normalization constant N is fixed by normalize_profile so that
// integral dmu |psi|^2 = 1; evaluation before that is an error.
class Profile {
public:
    static Profile spherical_gaussian(double sigma);
    static Profile deformed_gaussian(double sigma, double epsilon,
                                     double phase = kDeformationPhaseDefault);

    ProfileKind kind() const { return kind_; }
    double sigma() const { return sigma_; }
    double epsilon() const { return epsilon_; }
    double phase() const { return phase_; }

    bool normalized() const { return norm_ > 0.0; }
    double norm() const;

    // Copy with an explicit normalization constant (testing hook).
    Profile with_norm(double n) const;

private:
    Profile(ProfileKind kind, double sigma, double epsilon, double phase);

    ProfileKind kind_;
    double sigma_;
    double epsilon_;
    double phase_;
    double norm_ = 0.0; // 0 marks "not yet normalized"
};

// psi(p); throws UnnormalizedProfile if N is not set.
double eval_profile(const Profile& profile, const MomentumPoint& point);

// Fixes N so that integral dmu |psi|^2 = 1 on the given grid. The integral is
// re-checked on the doubled grid; a relative change above check_tol throws
// NumericalFailure instead of silently accepting a truncated integral.
Profile normalize_profile(const Profile& profile, const QuadratureGrid& grid, double mass,
                          double check_tol = 1e-6);

} // namespace spinboost
