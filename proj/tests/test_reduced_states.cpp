#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "spinboost/contextuality.hpp"
#include "spinboost/errors.hpp"
#include "spinboost/reduced_states.hpp"

#include "test_helpers.hpp"

using namespace spinboost;
using testing::World;

namespace {

const Mat2 kHalfIdentity = Mat2::identity() * 0.5;

SpinDensity boosted_canonical(const World& w, SpinLabel label, double zeta) {
    const auto& family = w.family;
    const auto idx = static_cast<std::size_t>(label);
    return boosted_reduced_density(family[idx], Rapidity(zeta), w.grid, w.config.mass);
}

} // namespace

TEST_CASE("spin density validation") {
    CHECK_THROWS_AS(SpinDensity::from_matrix(Mat2::from_rows(1.0, 0.5, 0.1, 0.0)), InvalidInput);
    CHECK_THROWS_AS(SpinDensity::from_matrix(Mat2::identity()), InvalidInput); // trace 2
    CHECK_THROWS_AS(SpinDensity::from_matrix(Mat2::from_rows(1.5, 0.0, 0.0, -0.5)),
                    InvalidInput); // negative eigenvalue
    const SpinDensity plus = SpinDensity::pure(1.0, 1.0);
    CHECK(plus.matrix()(0, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(plus.purity() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("relativistic qubit invariants") {
    const auto& w = World::get();
    const Profile& prof = w.family[0].profile_up();
    CHECK_THROWS_AS(RelativisticQubit(0.9, 0.1, prof, prof), InvalidInput);
    CHECK_THROWS_AS(RelativisticQubit(1.0, 0.0, Profile::spherical_gaussian(2.0), prof),
                    UnnormalizedProfile);
    CHECK_NOTHROW(RelativisticQubit(cplx(0.6, 0.0), cplx(0.0, 0.8), prof, prof));
}

TEST_CASE("rest-frame reduced densities") {
    const auto& w = World::get();

    SUBCASE("z-up state reduces to the pure up projector") {
        const SpinDensity rho = rest_reduced_density(w.family[0], w.grid, w.config.mass);
        CHECK(max_abs_diff(rho.matrix(), SpinDensity::pure(1.0, 0.0).matrix()) < 1e-12);
    }

    SUBCASE("x-plus state with a shared profile reduces to the plus projector") {
        const SpinDensity rho = rest_reduced_density(w.family[2], w.grid, w.config.mass);
        CHECK(max_abs_diff(rho.matrix(), SpinDensity::pure(1.0, 1.0).matrix()) < 1e-12);
    }

    SUBCASE("off-diagonal is the amplitude product scaled by the profile overlap") {
        // distinct widths: the overlap drops below 1 and the state mixes;
        // a vanishing overlap would leave exactly I/2
        const Profile narrow = normalize_profile(Profile::spherical_gaussian(1.0), w.grid, 1.0);
        const Profile wide = normalize_profile(Profile::spherical_gaussian(8.0), w.grid, 1.0);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const RelativisticQubit state(inv_sqrt2, inv_sqrt2, narrow, wide);
        const double overlap = integrate_real(
            [&](const MomentumPoint& pt) {
                return eval_profile(narrow, pt) * eval_profile(wide, pt);
            },
            w.grid, 1.0);
        CHECK((overlap > 0.05 && overlap < 0.95));
        const SpinDensity rho = rest_reduced_density(state, w.grid, 1.0);
        CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rho.matrix()(0, 1).real() == doctest::Approx(0.5 * overlap).epsilon(1e-12));
        const Mat2 limit_zero_overlap = kHalfIdentity;
        CHECK(max_abs_diff(rho.matrix(), limit_zero_overlap) ==
              doctest::Approx(0.5 * overlap).epsilon(1e-10));
    }
}

TEST_CASE("boost integrals") {
    const auto& w = World::get();

    SUBCASE("identity boost") {
        const BoostIntegrals ints =
            boost_integrals(w.family[0].profile_up(), Rapidity(0.0), w.grid, 1.0);
        CHECK(ints.i1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(ints.i2) < 1e-14);
        CHECK(std::abs(ints.i3) < 1e-14);
        CHECK(std::abs(ints.i4) < 1e-14);
    }

    SUBCASE("spherical profiles have exactly vanishing harmonics") {
        const Profile sph = normalize_profile(Profile::spherical_gaussian(2.0), w.grid, 1.0);
        for (double zeta : {0.3, 1.0, 3.0}) {
            const BoostIntegrals ints = boost_integrals(sph, Rapidity(zeta), w.grid, 1.0);
            CHECK(std::abs(ints.i3) < 1e-12);
            CHECK(std::abs(ints.i4) < 1e-12);
            CHECK(ints.i1 + ints.i2 == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(ints.i1 >= 0.0);
            CHECK(ints.i2 >= 0.0);
        }
    }

    SUBCASE("deformed profile: frozen values at zeta = 1") {
        // doubled-resolution quadrature oracle pins these digits
        const BoostIntegrals ints =
            boost_integrals(w.family[0].profile_up(), Rapidity(1.0), w.grid, 1.0);
        CHECK(ints.i1 == doctest::Approx(0.951721871225466).epsilon(1e-10));
        CHECK(ints.i2 == doctest::Approx(0.0482781287745331).epsilon(1e-9));
        CHECK(std::abs(ints.i3) < 1e-12);
        CHECK(std::abs(ints.i4) > 1e-4);
        CHECK(ints.i4.real() == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(ints.i4.imag() == doctest::Approx(-0.00993072584384187).epsilon(1e-9));
    }
}

TEST_CASE("boosted reduced densities") {
    const auto& w = World::get();

    SUBCASE("identity boost reproduces the rest-frame state") {
        for (std::size_t i = 0; i < 4; ++i) {
            const SpinDensity rho = rest_reduced_density(w.family[i], w.grid, 1.0);
            const SpinDensity tau =
                boosted_reduced_density(w.family[i], Rapidity(0.0), w.grid, 1.0);
            CHECK(max_abs_diff(rho.matrix(), tau.matrix()) < 1e-10);
        }
    }

    SUBCASE("direct accumulation equals the integral-assembled form") {
        for (double zeta : {0.1, 0.5, 1.0, 2.0}) {
            for (const SpinLabel label : kSpinLabels) {
                const auto idx = static_cast<std::size_t>(label);
                const SpinDensity direct =
                    boosted_reduced_density(w.family[idx], Rapidity(zeta), w.grid, 1.0);
                const BoostIntegrals ints =
                    boost_integrals(w.family[idx].profile_up(), Rapidity(zeta), w.grid, 1.0);
                const SpinDensity assembled = boosted_from_integrals(label, ints);
                CHECK(max_abs_diff(direct.matrix(), assembled.matrix()) < 1e-10);
            }
        }
    }

    SUBCASE("frozen entries at zeta = 1") {
        const SpinDensity tau_up = boosted_canonical(w, SpinLabel::up, 1.0);
        CHECK(tau_up.matrix()(0, 0).real() == doctest::Approx(0.951721871225466).epsilon(1e-9));
        CHECK(tau_up.matrix()(1, 1).real() == doctest::Approx(0.0482781287745331).epsilon(1e-8));
        CHECK(tau_up.matrix()(0, 1).imag() == doctest::Approx(0.00993072584384187).epsilon(1e-8));

        const SpinDensity tau_plus = boosted_canonical(w, SpinLabel::plus, 1.0);
        CHECK(tau_plus.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(tau_plus.matrix()(0, 1).real() == doctest::Approx(0.468176541660018).epsilon(1e-8));

        const SpinDensity tau_minus = boosted_canonical(w, SpinLabel::minus, 1.0);
        CHECK(tau_minus.matrix()(0, 1).real() ==
              doctest::Approx(-0.455849467898712).epsilon(1e-8));
    }

    SUBCASE("trace, positivity and purity decay across rapidities") {
        for (double zeta : {0.01, 0.5, 2.0, 5.0}) {
            for (std::size_t i = 0; i < 4; ++i) {
                const SpinDensity tau =
                    boosted_reduced_density(w.family[i], Rapidity(zeta), w.grid, 1.0);
                CHECK(std::abs(tau.matrix().trace().real() - 1.0) < 1e-8);
                CHECK(min_eigenvalue(tau.matrix()) > -1e-10);
                const double rest_purity =
                    rest_reduced_density(w.family[i], w.grid, 1.0).purity();
                CHECK(tau.purity() <= rest_purity + 1e-10);
            }
        }
    }

    SUBCASE("boost map is bilinear in the spin amplitudes") {
        // polarization identity: reconstruct tau of a generic state from the
        // four tomographic amplitude pairs with a shared profile
        const Profile prof = w.family[2].profile_up();
        const double s = 1.0 / std::sqrt(2.0);
        const Rapidity zeta(0.8);
        auto tau_of = [&](cplx a, cplx b) {
            return boosted_reduced_density(RelativisticQubit(a, b, prof, prof), zeta, w.grid, 1.0)
                .matrix();
        };
        const Mat2 t_up = tau_of(1.0, 0.0);
        const Mat2 t_down = tau_of(0.0, 1.0);
        const Mat2 t_plus = tau_of(s, s);
        const Mat2 t_imag = tau_of(s, cplx(0.0, 1.0) * s);
        // Hermitian and anti-Hermitian parts of the cross term B(up, down),
        // with B(x, y) the sesquilinear accumulation of (D x)(D y)^dag:
        //   t_plus - (t_up + t_down)/2 = (B + B^dag)/2
        //   t_imag - (t_up + t_down)/2 = -i (B - B^dag)/2
        const Mat2 sum_half = (t_up + t_down) * 0.5;
        const Mat2 herm_part = t_plus - sum_half;
        const Mat2 skew_part = t_imag - sum_half;

        testing::SeededUniform rng(99);
        for (int trial = 0; trial < 8; ++trial) {
            const cplx a(rng.next(-1, 1), rng.next(-1, 1));
            cplx b(rng.next(-1, 1), rng.next(-1, 1));
            const double n = std::sqrt(std::norm(a) + std::norm(b));
            const cplx an = a / n, bn = b / n;
            const Mat2 expected = boosted_reduced_density(
                                      RelativisticQubit(an, bn, prof, prof), zeta, w.grid, 1.0)
                                      .matrix();
            // c B + conj(c) B^dag with c = an conj(bn)
            const cplx cross = an * std::conj(bn);
            Mat2 recon = t_up * std::norm(an) + t_down * std::norm(bn);
            recon += herm_part * (2.0 * cross.real());
            recon += skew_part * (-2.0 * cross.imag());
            CHECK(max_abs_diff(recon, expected) < 1e-12);
        }
    }

    SUBCASE("spherical profiles preserve the rank of the canonical family") {
        RunConfig cfg;
        cfg.epsilon = 0.0;
        cfg.sigma_up = cfg.sigma_down = cfg.sigma_plus = cfg.sigma_minus = 3.0;
        const auto family = make_state_family(cfg, w.grid);
        for (double zeta : {0.5, 1.0, 2.0}) {
            std::vector<SpinDensity> taus;
            std::vector<SpinDensity> rhos;
            for (const auto& st : family) {
                rhos.push_back(rest_reduced_density(st, w.grid, cfg.mass));
                taus.push_back(boosted_reduced_density(st, Rapidity(zeta), w.grid, cfg.mass));
            }
            CHECK(gram_rank(rhos) == 3);
            CHECK(gram_rank(taus) == 3);
        }
    }
}

TEST_CASE("ensemble mixing") {
    const SpinDensity up = SpinDensity::pure(1.0, 0.0);
    const SpinDensity down = SpinDensity::pure(0.0, 1.0);
    const SpinDensity plus = SpinDensity::pure(1.0, 1.0);
    const SpinDensity minus = SpinDensity::pure(1.0, -1.0);
    const std::array<double, 2> half{0.5, 0.5};

    SUBCASE("half-half of orthogonal projectors is maximally mixed") {
        const std::array<SpinDensity, 2> zpair{up, down};
        CHECK(max_abs_diff(ensemble_mix(zpair, half).matrix(), kHalfIdentity) < 1e-15);
    }

    SUBCASE("the two rest-frame ensembles coincide") {
        const std::array<SpinDensity, 2> zpair{up, down};
        const std::array<SpinDensity, 2> xpair{plus, minus};
        CHECK(max_abs_diff(ensemble_mix(zpair, half).matrix(),
                           ensemble_mix(xpair, half).matrix()) < 1e-15);
    }

    SUBCASE("boosted ensembles split by a strictly positive trace distance") {
        const auto& w = World::get();
        const std::array<SpinDensity, 2> first{boosted_canonical(w, SpinLabel::up, 1.0),
                                               boosted_canonical(w, SpinLabel::down, 1.0)};
        const std::array<SpinDensity, 2> second{boosted_canonical(w, SpinLabel::plus, 1.0),
                                                boosted_canonical(w, SpinLabel::minus, 1.0)};
        const Mat2 diff =
            ensemble_mix(first, half).matrix() - ensemble_mix(second, half).matrix();
        const auto eig = hermitian_eigenvalues(diff);
        const double trace_distance = std::abs(eig.lo) + std::abs(eig.hi);
        CHECK(trace_distance == doctest::Approx(0.0289428513050249).epsilon(1e-7));
    }

    SUBCASE("weight validation") {
        const std::array<SpinDensity, 2> pair{up, down};
        const std::array<double, 2> bad_sum{0.6, 0.6};
        const std::array<double, 2> negative{1.5, -0.5};
        CHECK_THROWS_AS(ensemble_mix(pair, bad_sum), InvalidInput);
        CHECK_THROWS_AS(ensemble_mix(pair, negative), InvalidInput);
    }
}
