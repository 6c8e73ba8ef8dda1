#include "spinboost/contextuality.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "spinboost/errors.hpp"

namespace spinboost {

BlochView BlochView::of(const Mat2& m) {
    return BlochView{
        m(0, 0).real() + m(1, 1).real(),
        m(0, 1).real() + m(1, 0).real(),
        m(1, 0).imag() - m(0, 1).imag(),
        m(0, 0).real() - m(1, 1).real(),
    };
}

Mat2 BlochView::matrix() const {
    Mat2 m;
    m(0, 0) = 0.5 * (r0 + rz);
    m(1, 1) = 0.5 * (r0 - rz);
    m(0, 1) = 0.5 * cplx(rx, -ry);
    m(1, 0) = 0.5 * cplx(rx, ry);
    return m;
}

namespace {

Eigen::MatrixXd bloch_rows(std::span<const SpinDensity> states) {
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(states.size()), 4);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const BlochView v = BlochView::of(states[i].matrix());
        rows(static_cast<Eigen::Index>(i), 0) = v.r0;
        rows(static_cast<Eigen::Index>(i), 1) = v.rx;
        rows(static_cast<Eigen::Index>(i), 2) = v.ry;
        rows(static_cast<Eigen::Index>(i), 3) = v.rz;
    }
    return rows;
}

// Tr(tau F(a, b, c, d)) is linear in (a, b, c, d) with this row.
Eigen::RowVector4d response_row(const Mat2& tau) {
    Eigen::RowVector4d r;
    r << tau(0, 0).real(), 2.0 * tau(0, 1).real(), 2.0 * tau(0, 1).imag(), tau(1, 1).real();
    return r;
}

} // namespace

std::vector<double> gram_singular_values(std::span<const SpinDensity> states) {
    if (states.empty()) throw InvalidInput("gram_singular_values: empty state list");
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(bloch_rows(states));
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int gram_rank(std::span<const SpinDensity> states, double tol) {
    const auto sv = gram_singular_values(states);
    int rank = 0;
    for (double s : sv)
        if (s > tol * sv.front()) ++rank;
    return rank;
}

bool is_noncontextual_pure(std::span<const SpinDensity> states, double tol) {
    if (states.empty()) throw InvalidInput("is_noncontextual_pure: empty state list");
    for (const auto& s : states) {
        if (s.purity() <= 1.0 - 1e-8)
            throw InvalidInput("is_noncontextual_pure: input state is not pure (purity " +
                               std::to_string(s.purity()) + "); the criterion only applies to "
                               "pure states");
    }
    return gram_rank(states, tol) == static_cast<int>(states.size());
}

DualFrame build_dual_frame(std::span<const SpinDensity> states) {
    if (states.size() != 4) throw InvalidInput("build_dual_frame: exactly four states required");

    // Tr(tau_i F_j) = delta_ij for j = 1..3 and all i; F_4 = I - F_1 - F_2 - F_3
    // makes the j = 4 column follow from Tr(tau_i) = 1, so it is verified
    // below rather than imposed.
    Eigen::Matrix4d sys;
    for (int i = 0; i < 4; ++i) sys.row(i) = response_row(states[static_cast<std::size_t>(i)].matrix());

    const Eigen::JacobiSVD<Eigen::Matrix4d> svd(sys);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(3);
    const double condition = smax / std::max(smin, 1e-300);
    if (!(condition < 1e12)) {
        std::ostringstream os;
        os << "build_dual_frame: response system is singular or near-singular (condition number "
           << condition << "); the states are linearly dependent and admit no finite dual frame";
        throw SingularSystem(os.str());
    }

    Eigen::Matrix<double, 4, 3> rhs = Eigen::Matrix<double, 4, 3>::Zero();
    rhs(0, 0) = rhs(1, 1) = rhs(2, 2) = 1.0;
    const auto lu = sys.partialPivLu();
    Eigen::Matrix<double, 4, 3> coeff = lu.solve(rhs);
    // One refinement step when the solve is noticeably ill-conditioned.
    const Eigen::Matrix<double, 4, 3> defect = rhs - sys * coeff;
    if (defect.cwiseAbs().maxCoeff() > 1e-10) coeff += lu.solve(defect);

    DualFrame frame{};
    Mat2 sum;
    for (int j = 0; j < 3; ++j) {
        const double a = coeff(0, j), b = coeff(1, j), c = coeff(2, j), d = coeff(3, j);
        Mat2 f;
        f(0, 0) = a;
        f(0, 1) = cplx(b, c);
        f(1, 0) = cplx(b, -c);
        f(1, 1) = d;
        frame.operators[static_cast<std::size_t>(j)] = f;
        sum += f;
    }
    frame.operators[3] = Mat2::identity() - sum;

    double residual = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const cplx t =
                (states[static_cast<std::size_t>(i)].matrix() * frame.operators[static_cast<std::size_t>(j)])
                    .trace();
            const double want = (i == j) ? 1.0 : 0.0;
            residual = std::max(residual, std::abs(t - cplx(want, 0.0)));
        }
    }
    frame.residual = residual;
    frame.condition = condition;
    return frame;
}

std::vector<Povm> random_projective_povms(int count, std::uint64_t seed) {
    if (count < 0) throw InvalidInput("random_projective_povms: count must be >= 0");
    std::mt19937_64 rng(seed);
    // Explicit bit transform keeps the stream identical across platforms.
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Povm> povms;
    povms.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double z = 2.0 * uniform() - 1.0;
        const double az = 2.0 * std::numbers::pi * uniform();
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const BlochView v{1.0, s * std::cos(az), s * std::sin(az), z};
        const Mat2 p = v.matrix();
        povms.push_back({p, Mat2::identity() - p});
    }
    return povms;
}

OntologyCheck verify_ontological_model(std::span<const SpinDensity> states, const DualFrame& frame,
                                       std::span<const Povm> measurements) {
    if (states.size() != frame.operators.size())
        throw InvalidInput("verify_ontological_model: frame must be built from these states");
    OntologyCheck check{0.0, std::numeric_limits<double>::infinity(), 0.0};
    const std::size_t n = states.size();
    for (std::size_t i = 0; i < n; ++i) {
        double weight_sum = 0.0;
        std::vector<double> response(n);
        for (std::size_t l = 0; l < n; ++l) {
            response[l] = (states[i].matrix() * frame.operators[l]).trace().real();
            weight_sum += response[l];
            check.min_response = std::min(check.min_response, response[l]);
        }
        check.max_weight_error = std::max(check.max_weight_error, std::abs(weight_sum - 1.0));
        for (const auto& povm : measurements) {
            for (const auto& effect : povm) {
                const double born = (states[i].matrix() * effect).trace().real();
                double model = 0.0;
                for (std::size_t l = 0; l < n; ++l)
                    model += response[l] * (states[l].matrix() * effect).trace().real();
                check.max_violation = std::max(check.max_violation, std::abs(born - model));
            }
        }
    }
    return check;
}

} // namespace spinboost
