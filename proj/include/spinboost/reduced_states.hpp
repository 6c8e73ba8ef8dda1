#pragma once

#include <span>

#include "spinboost/profiles.hpp"

namespace spinboost {

// 2x2 Hermitian, unit-trace, positive semidefinite matrix. Construction
// validates the invariants (trace within trace_tol of 1, smallest eigenvalue
// above -psd_tol) and symmetrizes exactly.
class SpinDensity {
public:
    static SpinDensity from_matrix(const Mat2& m, double trace_tol = 1e-8,
                                   double psd_tol = 1e-10);
    // Pure state a|up> + b|down> (amplitudes normalized internally).
    static SpinDensity pure(cplx up, cplx down);

    const Mat2& matrix() const { return m_; }
    double purity() const;

private:
    explicit SpinDensity(const Mat2& m) : m_(m) {}
    Mat2 m_;
};

// One-particle spin-1/2 state with momentum profiles:
//   amp_up |up> (x) psi_up  +  amp_down |down> (x) psi_down
// Requires |amp_up|^2 + |amp_down|^2 = 1 and normalized profiles.
class RelativisticQubit {
public:
    RelativisticQubit(cplx amp_up, cplx amp_down, Profile profile_up, Profile profile_down);

    // Both spin components share one profile.
    static RelativisticQubit single_profile(cplx amp_up, cplx amp_down, const Profile& shared);

    cplx amp_up() const { return amp_up_; }
    cplx amp_down() const { return amp_down_; }
    const Profile& profile_up() const { return profile_up_; }
    const Profile& profile_down() const { return profile_down_; }

private:
    cplx amp_up_, amp_down_;
    Profile profile_up_, profile_down_;
};

// The four canonical spin directions used by the discrimination experiments:
// z-up, z-down, x-plus, x-minus, each carrying a single momentum profile.
enum class SpinLabel { up, down, plus, minus };

RelativisticQubit canonical_state(SpinLabel label, const Profile& shared);

// Boost-response integrals of one profile under a z-boost:
//   i1 = integral dmu |psi|^2 alpha^2           (real)
//   i2 = integral dmu |psi|^2 beta^2            (real)
//   i3 = integral dmu |psi|^2 beta^2 e^{2i phi} (second harmonic)
//   i4 = integral dmu |psi|^2 (-beta e^{i phi}) alpha (first harmonic)
// i1 + i2 = 1 for a normalized profile.
struct BoostIntegrals {
    double i1;
    double i2;
    cplx i3;
    cplx i4;
};

// Spin state after tracing out momentum in the rest frame: diagonal
// (|amp_up|^2, |amp_down|^2), off-diagonal amp_up conj(amp_down) <psi_up, psi_down>.
SpinDensity rest_reduced_density(const RelativisticQubit& state, const QuadratureGrid& grid,
                                 double mass);

BoostIntegrals boost_integrals(const Profile& profile, Rapidity zeta, const QuadratureGrid& grid,
                               double mass);

// Reduced spin state in the boosted frame, accumulated directly as
// integral dmu [D(W) chi(p)] [D(W) chi(p)]^dag with
// chi(p) = (amp_up psi_up(p), amp_down psi_down(p)).
SpinDensity boosted_reduced_density(const RelativisticQubit& state, Rapidity zeta,
                                    const QuadratureGrid& grid, double mass);

// Boosted state of a canonical single-profile state assembled from the
// closed-form integral expressions (the cross-check path for the direct
// accumulation above).
SpinDensity boosted_from_integrals(SpinLabel label, const BoostIntegrals& ints);

// Convex combination; weights nonnegative and summing to 1 within 1e-12.
SpinDensity ensemble_mix(std::span<const SpinDensity> states, std::span<const double> weights);

} // namespace spinboost
