#pragma once

#include "spinboost/mat2.hpp"

namespace spinboost {

// Boosts are restricted to the z-axis; general directions are obtained by
// rotating inputs, not by generalizing these kernels.

// Rapidities beyond this magnitude are rejected: the closed-form Wigner
// entries lose relative precision long before cosh overflows.
inline constexpr double kMaxRapidity = 20.0;

// Momentum-space sample in spherical coordinates, natural units (same units
// for p and m). Validates on construction.
struct MomentumPoint {
    double p;
    double theta;
    double phi;
    double m;

    MomentumPoint(double p_, double theta_, double phi_, double m_);

    double energy() const;
};

// z-axis boost parameter. zeta = 0 is the identity boost.
class Rapidity {
public:
    explicit Rapidity(double zeta);
    double value() const { return zeta_; }

private:
    double zeta_;
};

// Spin-1/2 little-group rotation for a z-boost: the 2x2 unitary
//   [[ alpha,            beta e^{-i phi} ],
//    [ -beta e^{i phi},  alpha           ]]
// with alpha^2 + beta^2 = 1.
struct WignerHalf {
    double alpha;
    double beta;
    double phi;

    Mat2 matrix() const;
};

// E = sqrt(m^2 + p^2). Rejects p < 0 or m <= 0.
double energy(double p, double m);

// E' = E cosh(zeta) + p cos(theta) sinh(zeta); always >= m.
double boosted_energy(const MomentumPoint& point, Rapidity zeta);

// alpha = sqrt((E+m)/(E'+m)) [cosh(zeta/2) + p cos(theta)/(E+m) sinh(zeta/2)]
// beta  = p sin(theta) sinh(zeta/2) / sqrt((E+m)(E'+m))
WignerHalf wigner_half(const MomentumPoint& point, Rapidity zeta);

} // namespace spinboost
