#pragma once

#include <vector>

#include "spinboost/reduced_states.hpp"

namespace spinboost {

// |lambda_1| + |lambda_2| via the closed-form 2x2 eigenvalues. Rejects
// non-Hermitian input.
double trace_norm(const Mat2& h);

// Optimal equal-prior two-state discrimination probability,
// 1/2 + ||rho_a - rho_b||_1 / 4. Unequal priors go through min_error_sdp.
double helstrom(const SpinDensity& rho_a, const SpinDensity& rho_b);

// Minimum-error discrimination instance: guess which of `states` was
// prepared, given prior probabilities.
class DiscriminationProblem {
public:
    DiscriminationProblem(std::vector<SpinDensity> states, std::vector<double> priors);

    static DiscriminationProblem uniform(std::vector<SpinDensity> states);

    const std::vector<SpinDensity>& states() const { return states_; }
    const std::vector<double>& priors() const { return priors_; }
    std::size_t size() const { return states_.size(); }

private:
    std::vector<SpinDensity> states_;
    std::vector<double> priors_;
};

struct DiscriminationResult {
    std::vector<Mat2> povm; // PSD effects summing to I
    double p_success;       // sum_i p_i Tr(rho_i M_i) of the returned POVM
    Mat2 dual_operator;     // feasible Y with Y >= p_i rho_i for all i
    double duality_gap;     // Tr(Y) - p_success, certified optimality bound
    int iterations;
};

// Maximize sum_i p_i Tr(rho_i M_i) over POVMs {M_i}. Primal: accelerated
// projected gradient ascent, feasibility restored by Dykstra alternating
// projections between {sum M_i = I} and the PSD cones. Certificate: the
// returned Y is dual feasible by construction, so duality_gap bounds the
// distance to the optimum; the result is accepted only when the gap is
// below tol. Deterministic. Throws NumericalFailure if the gap never
// reaches tol within the iteration budget.
DiscriminationResult min_error_sdp(const DiscriminationProblem& problem, double tol = 1e-6);

} // namespace spinboost
