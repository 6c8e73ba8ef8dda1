#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinboost/errors.hpp"
#include "spinboost/kinematics.hpp"

using namespace spinboost;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("energy: closed form and validation") {
    CHECK(energy(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy(3.0, 4.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(energy(1.0, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(energy(-0.5, 1.0), InvalidInput);
    CHECK_THROWS_AS(energy(1.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(energy(1.0, -2.0), InvalidInput);
}

TEST_CASE("momentum point validation") {
    CHECK_NOTHROW(MomentumPoint(0.0, 0.0, 0.0, 1.0));
    CHECK_THROWS_AS(MomentumPoint(-1.0, 0.0, 0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(MomentumPoint(1.0, -0.1, 0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(MomentumPoint(1.0, kPi + 0.1, 0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(MomentumPoint(1.0, 0.0, 2.0 * kPi, 1.0), InvalidInput);
    CHECK_THROWS_AS(MomentumPoint(1.0, 0.0, 0.0, 0.0), InvalidInput);
}

TEST_CASE("rapidity range") {
    CHECK_NOTHROW(Rapidity(0.0));
    CHECK_NOTHROW(Rapidity(-20.0));
    CHECK_THROWS_AS(Rapidity(20.5), InvalidInput);
    CHECK_THROWS_AS(Rapidity(std::nan("")), InvalidInput);
}

TEST_CASE("boosted energy") {
    // direct evaluation oracle: E' = E cosh(zeta) + p cos(theta) sinh(zeta)
    const MomentumPoint transverse(1.0, kPi / 2.0, 0.0, 1.0);
    CHECK(boosted_energy(transverse, Rapidity(2.0)) ==
          doctest::Approx(5.32054817063209).epsilon(1e-12));

    const MomentumPoint longitudinal(1.0, 0.0, 0.0, 1.0);
    CHECK(boosted_energy(longitudinal, Rapidity(1.0)) ==
          doctest::Approx(3.3574467552348).epsilon(1e-12));

    SUBCASE("identity boost returns E") {
        const MomentumPoint pt(2.7, 1.1, 0.3, 0.5);
        CHECK(boosted_energy(pt, Rapidity(0.0)) == pt.energy());
    }

    SUBCASE("theta = 0 reduces to the 1-D Lorentz transform") {
        for (double p : {0.0, 0.5, 2.0, 10.0}) {
            for (double zeta : {-3.0, -1.0, 0.5, 2.5}) {
                const MomentumPoint pt(p, 0.0, 0.0, 1.0);
                const double expected = pt.energy() * std::cosh(zeta) + p * std::sinh(zeta);
                CHECK(boosted_energy(pt, Rapidity(zeta)) ==
                      doctest::Approx(expected).epsilon(1e-13));
            }
        }
    }

    SUBCASE("timelike preservation: E' >= m") {
        for (double p : {0.0, 0.1, 1.0, 5.0, 20.0})
            for (double theta : {0.0, 0.7, kPi / 2, 2.6, kPi})
                for (double zeta : {-5.0, -1.0, 0.01, 3.0})
                    CHECK(boosted_energy(MomentumPoint(p, theta, 0.0, 1.0), Rapidity(zeta)) >=
                          1.0 - 1e-12);
    }
}

TEST_CASE("wigner rotation") {
    SUBCASE("identity boost gives exactly (1, 0)") {
        const WignerHalf w = wigner_half(MomentumPoint(3.2, 1.7, 0.4, 1.0), Rapidity(0.0));
        CHECK(w.alpha == 1.0);
        CHECK(w.beta == 0.0);
        CHECK(w.phi == 0.4);
    }

    SUBCASE("momentum parallel to the boost gives no spin rotation") {
        const WignerHalf w = wigner_half(MomentumPoint(2.0, 0.0, 0.0, 1.0), Rapidity(1.5));
        CHECK(w.beta == 0.0);
    }

    SUBCASE("frozen transverse value") {
        // direct evaluation of the alpha/beta closed forms, cross-checked
        // against the little-group half-angle formula
        const WignerHalf w = wigner_half(MomentumPoint(1.0, kPi / 2.0, 0.0, 1.0), Rapidity(1.0));
        CHECK(w.alpha == doctest::Approx(0.982168645072746).epsilon(1e-12));
        CHECK(w.beta == doctest::Approx(0.188002001680741).epsilon(1e-12));
        CHECK(w.alpha * w.alpha + w.beta * w.beta == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("unitarity on a stress grid") {
        double worst = 0.0;
        for (int ip = 0; ip <= 20; ++ip) {
            for (int it = 0; it <= 16; ++it) {
                for (int iz = -10; iz <= 10; ++iz) {
                    const MomentumPoint pt(ip * 1.0, it * kPi / 16.0, 0.0, 1.0);
                    const WignerHalf w = wigner_half(pt, Rapidity(iz * 0.5));
                    worst = std::max(worst,
                                     std::abs(w.alpha * w.alpha + w.beta * w.beta - 1.0));
                }
            }
        }
        CHECK(worst < 1e-12);
    }

    SUBCASE("beta is nonnegative for nonnegative rapidity") {
        for (double p : {0.0, 0.3, 2.0, 15.0})
            for (double theta : {0.0, 0.5, kPi / 2, 2.9, kPi})
                for (double zeta : {0.0, 0.02, 1.0, 4.0}) {
                    const WignerHalf w = wigner_half(MomentumPoint(p, theta, 0.0, 1.0),
                                                     Rapidity(zeta));
                    CHECK(w.beta >= 0.0);
                }
    }

    SUBCASE("assembled matrix is unitary") {
        const WignerHalf w = wigner_half(MomentumPoint(1.3, 0.9, 2.1, 0.7), Rapidity(-2.2));
        const Mat2 d = w.matrix();
        CHECK(max_abs_diff(d * d.adjoint(), Mat2::identity()) < 1e-12);
        CHECK(std::abs(d(0, 1) + std::conj(d(1, 0))) < 1e-15); // D_ud = -D_du^*
        CHECK(d(0, 0) == d(1, 1));
    }
}
