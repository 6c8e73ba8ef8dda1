#include "spinboost/reduced_states.hpp"

#include <cmath>
#include <sstream>

#include "spinboost/errors.hpp"

namespace spinboost {

SpinDensity SpinDensity::from_matrix(const Mat2& m, double trace_tol, double psd_tol) {
    if (!is_hermitian(m, 1e-10)) throw InvalidInput("SpinDensity: matrix is not Hermitian");
    const Mat2 h = hermitize(m);
    const double tr = h.trace().real();
    if (std::abs(tr - 1.0) > trace_tol) {
        std::ostringstream os;
        os << "SpinDensity: trace " << tr << " deviates from 1 by more than " << trace_tol;
        throw InvalidInput(os.str());
    }
    if (min_eigenvalue(h) < -psd_tol) {
        std::ostringstream os;
        os << "SpinDensity: min eigenvalue " << min_eigenvalue(h) << " below -" << psd_tol;
        throw InvalidInput(os.str());
    }
    return SpinDensity(h);
}

SpinDensity SpinDensity::pure(cplx up, cplx down) {
    const double n = std::sqrt(std::norm(up) + std::norm(down));
    if (!(n > 0.0)) throw InvalidInput("SpinDensity::pure: zero amplitude vector");
    up /= n;
    down /= n;
    Mat2 m;
    m(0, 0) = up * std::conj(up);
    m(0, 1) = up * std::conj(down);
    m(1, 0) = down * std::conj(up);
    m(1, 1) = down * std::conj(down);
    return SpinDensity(hermitize(m));
}

double SpinDensity::purity() const { return (m_ * m_).trace().real(); }

RelativisticQubit::RelativisticQubit(cplx amp_up, cplx amp_down, Profile profile_up,
                                     Profile profile_down)
    : amp_up_(amp_up), amp_down_(amp_down), profile_up_(std::move(profile_up)),
      profile_down_(std::move(profile_down)) {
    const double s = std::norm(amp_up_) + std::norm(amp_down_);
    if (std::abs(s - 1.0) > 1e-12)
        throw InvalidInput("RelativisticQubit: |amp_up|^2 + |amp_down|^2 must be 1, got " +
                           std::to_string(s));
    if (!profile_up_.normalized() || !profile_down_.normalized())
        throw UnnormalizedProfile("RelativisticQubit: profiles must be normalized");
}

RelativisticQubit RelativisticQubit::single_profile(cplx amp_up, cplx amp_down,
                                                    const Profile& shared) {
    return RelativisticQubit(amp_up, amp_down, shared, shared);
}

RelativisticQubit canonical_state(SpinLabel label, const Profile& shared) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (label) {
    case SpinLabel::up: return RelativisticQubit::single_profile(1.0, 0.0, shared);
    case SpinLabel::down: return RelativisticQubit::single_profile(0.0, 1.0, shared);
    case SpinLabel::plus: return RelativisticQubit::single_profile(inv_sqrt2, inv_sqrt2, shared);
    case SpinLabel::minus: return RelativisticQubit::single_profile(inv_sqrt2, -inv_sqrt2, shared);
    }
    throw InvalidInput("canonical_state: unknown label");
}

SpinDensity rest_reduced_density(const RelativisticQubit& state, const QuadratureGrid& grid,
                                 double mass) {
    const cplx a = state.amp_up();
    const cplx b = state.amp_down();
    // Profiles are real, so the overlap <psi_up, psi_down> is real.
    const double overlap = integrate_real(
        [&state](const MomentumPoint& pt) {
            return eval_profile(state.profile_up(), pt) * eval_profile(state.profile_down(), pt);
        },
        grid, mass);
    Mat2 m;
    m(0, 0) = std::norm(a);
    m(1, 1) = std::norm(b);
    m(0, 1) = a * std::conj(b) * overlap;
    m(1, 0) = std::conj(m(0, 1));
    return SpinDensity::from_matrix(m);
}

BoostIntegrals boost_integrals(const Profile& profile, Rapidity zeta, const QuadratureGrid& grid,
                               double mass) {
    struct Acc {
        double i1 = 0, i2 = 0;
        cplx i3, i4;
        Acc& operator+=(const Acc& o) {
            i1 += o.i1;
            i2 += o.i2;
            i3 += o.i3;
            i4 += o.i4;
            return *this;
        }
        Acc operator*(double w) const { return {i1 * w, i2 * w, i3 * w, i4 * w}; }
        bool finite() const {
            return std::isfinite(i1) && std::isfinite(i2) && detail::finite(i3) &&
                   detail::finite(i4);
        }
    };
    const Acc acc = integrate<Acc>(
        [&](const MomentumPoint& pt) {
            const double psi = eval_profile(profile, pt);
            const double d = psi * psi;
            const WignerHalf w = wigner_half(pt, zeta);
            const cplx phase(std::cos(pt.phi), std::sin(pt.phi));
            Acc v;
            v.i1 = d * w.alpha * w.alpha;
            v.i2 = d * w.beta * w.beta;
            v.i3 = d * w.beta * w.beta * phase * phase;
            v.i4 = d * (-w.beta * phase) * w.alpha;
            return v;
        },
        grid, mass);
    const double trace_defect = std::abs(acc.i1 + acc.i2 - 1.0);
    if (trace_defect > 1e-8) {
        std::ostringstream os;
        os << "boost_integrals: i1 + i2 = " << acc.i1 + acc.i2
           << " deviates from 1 beyond quadrature tolerance";
        throw NumericalFailure(os.str());
    }
    return BoostIntegrals{acc.i1, acc.i2, acc.i3, acc.i4};
}

SpinDensity boosted_reduced_density(const RelativisticQubit& state, Rapidity zeta,
                                    const QuadratureGrid& grid, double mass) {
    const cplx a = state.amp_up();
    const cplx b = state.amp_down();
    const Mat2 acc = integrate<Mat2>(
        [&](const MomentumPoint& pt) {
            const WignerHalf w = wigner_half(pt, zeta);
            const cplx phase(std::cos(pt.phi), std::sin(pt.phi));
            const cplx chi0 = a * eval_profile(state.profile_up(), pt);
            const cplx chi1 = b * eval_profile(state.profile_down(), pt);
            // v = D(W) chi
            const cplx v0 = w.alpha * chi0 + w.beta * std::conj(phase) * chi1;
            const cplx v1 = -w.beta * phase * chi0 + w.alpha * chi1;
            Mat2 outer;
            outer(0, 0) = v0 * std::conj(v0);
            outer(0, 1) = v0 * std::conj(v1);
            outer(1, 0) = v1 * std::conj(v0);
            outer(1, 1) = v1 * std::conj(v1);
            return outer;
        },
        grid, mass);
    return SpinDensity::from_matrix(acc);
}

SpinDensity boosted_from_integrals(SpinLabel label, const BoostIntegrals& ints) {
    const double i1 = ints.i1;
    const double i2 = ints.i2;
    const cplx i3 = ints.i3;
    const cplx i4 = ints.i4;
    Mat2 m;
    switch (label) {
    case SpinLabel::up:
        m(0, 0) = i1;
        m(0, 1) = std::conj(i4);
        m(1, 0) = i4;
        m(1, 1) = i2;
        break;
    case SpinLabel::down:
        m(0, 0) = i2;
        m(0, 1) = -std::conj(i4);
        m(1, 0) = -i4;
        m(1, 1) = i1;
        break;
    case SpinLabel::plus:
        m(0, 0) = 0.5 * (1.0 - i4 - std::conj(i4));
        m(0, 1) = 0.5 * (i1 - std::conj(i3));
        m(1, 0) = 0.5 * (i1 - i3);
        m(1, 1) = 0.5 * (1.0 + i4 + std::conj(i4));
        break;
    case SpinLabel::minus:
        m(0, 0) = 0.5 * (1.0 + i4 + std::conj(i4));
        m(0, 1) = 0.5 * (std::conj(i3) - i1);
        m(1, 0) = 0.5 * (i3 - i1);
        m(1, 1) = 0.5 * (1.0 - i4 - std::conj(i4));
        break;
    }
    return SpinDensity::from_matrix(m);
}

SpinDensity ensemble_mix(std::span<const SpinDensity> states, std::span<const double> weights) {
    if (states.empty() || states.size() != weights.size())
        throw InvalidInput("ensemble_mix: need equally many states and weights, and at least one");
    double sum = 0.0;
    for (double w : weights) {
        if (!(std::isfinite(w) && w >= 0.0))
            throw InvalidInput("ensemble_mix: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw InvalidInput("ensemble_mix: weights must sum to 1, got " + std::to_string(sum));
    Mat2 acc;
    for (std::size_t i = 0; i < states.size(); ++i) acc += states[i].matrix() * weights[i];
    return SpinDensity::from_matrix(acc);
}

} // namespace spinboost
