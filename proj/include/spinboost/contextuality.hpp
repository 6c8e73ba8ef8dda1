#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spinboost/reduced_states.hpp"

namespace spinboost {

// Pauli-basis coordinates of a Hermitian 2x2 matrix:
//   matrix = (r0 I + rx X + ry Y + rz Z) / 2,  r0 = trace.
struct BlochView {
    double r0;
    double rx;
    double ry;
    double rz;

    static BlochView of(const Mat2& m);
    Mat2 matrix() const;
};

// Relative singular-value threshold below which a direction is considered
// numerical noise rather than genuine independence.
inline constexpr double kRankTol = 1e-9;

// Singular values (descending) of the stacked Bloch vectors of the states.
std::vector<double> gram_singular_values(std::span<const SpinDensity> states);

// Linear-independence rank of the state set: singular values counting when
// above tol * largest.
int gram_rank(std::span<const SpinDensity> states, double tol = kRankTol);

// For pure states, non-contextuality is equivalent to linear independence.
// Inputs must have purity > 1 - 1e-8; anything more mixed is rejected.
bool is_noncontextual_pure(std::span<const SpinDensity> states, double tol = kRankTol);

// Four Hermitian operators F_j with sum F_j = I and Tr(tau_i F_j) = delta_ij
// for the generating states. Not necessarily positive: a pseudo-POVM.
struct DualFrame {
    std::array<Mat2, 4> operators;
    double residual;  // max |Tr(tau_i F_j) - delta_ij| over all 16 pairs
    double condition; // condition number of the solved system
};

// Solves the 12-parameter linear system F_j = F(a_j, b_j, c_j, d_j),
// j = 1..3, F_4 = I - F_1 - F_2 - F_3, such that Tr(tau_i F_j) = delta_ij.
// Requires exactly four states of full rank; a system with condition number
// above 1e12 throws SingularSystem (no finite frame).
DualFrame build_dual_frame(std::span<const SpinDensity> states);

using Povm = std::vector<Mat2>;

// `count` projective measurements {P(n), I - P(n)} with Bloch axes n drawn
// uniformly from the sphere; fully determined by the seed.
std::vector<Povm> random_projective_povms(int count, std::uint64_t seed);

struct OntologyCheck {
    // max over states rho_i and effects M_k of
    // |Tr(rho_i M_k) - sum_l Tr(rho_i F_l) Tr(tau_l M_k)|
    double max_violation;
    // min over (i, l) of Tr(rho_i F_l); must be >= -tol for a valid
    // non-contextual model
    double min_response;
    // max over i of |sum_l Tr(rho_i F_l) - 1|
    double max_weight_error;
};

// Checks that the frame reproduces the Born probabilities of `states` for
// every supplied measurement, with model states sigma_l = states[l] (the
// states the frame was built from) and model effects G_l = F_l.
OntologyCheck verify_ontological_model(std::span<const SpinDensity> states, const DualFrame& frame,
                                       std::span<const Povm> measurements);

} // namespace spinboost
