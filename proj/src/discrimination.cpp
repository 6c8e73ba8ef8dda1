#include "spinboost/discrimination.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "spinboost/contextuality.hpp"
#include "spinboost/errors.hpp"

namespace spinboost {

double trace_norm(const Mat2& h) {
    if (!is_hermitian(h, 1e-10 * std::max(1.0, h.max_abs())))
        throw InvalidInput("trace_norm: input is not Hermitian");
    const auto [lo, hi] = hermitian_eigenvalues(h);
    return std::abs(lo) + std::abs(hi);
}

double helstrom(const SpinDensity& rho_a, const SpinDensity& rho_b) {
    return 0.5 + 0.25 * trace_norm(rho_a.matrix() - rho_b.matrix());
}

DiscriminationProblem::DiscriminationProblem(std::vector<SpinDensity> states,
                                             std::vector<double> priors)
    : states_(std::move(states)), priors_(std::move(priors)) {
    if (states_.size() < 2)
        throw InvalidInput("DiscriminationProblem: at least two states required");
    if (priors_.size() != states_.size())
        throw InvalidInput("DiscriminationProblem: one prior per state required");
    double sum = 0.0;
    for (double p : priors_) {
        if (!(std::isfinite(p) && p >= 0.0))
            throw InvalidInput("DiscriminationProblem: priors must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw InvalidInput("DiscriminationProblem: priors must sum to 1, got " +
                           std::to_string(sum));
}

DiscriminationProblem DiscriminationProblem::uniform(std::vector<SpinDensity> states) {
    const std::size_t n = states.size();
    if (n == 0) throw InvalidInput("DiscriminationProblem: empty state list");
    return DiscriminationProblem(std::move(states),
                                 std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

namespace {

using Vec3 = std::array<double, 3>;

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

// Tightest dual trace reachable with vector part y: the trace coordinate must
// dominate every cone constraint, so
//   g(y) = max_i ( p_i + |y - p_i r_i| ),   Tr Y = g(y).
// Every y therefore yields a feasible dual operator; minimizing g is the full
// dual problem.
double dual_trace(const Vec3& y, const std::vector<Vec3>& r, const std::vector<double>& priors) {
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Vec3 d{y[0] - priors[i] * r[i][0], y[1] - priors[i] * r[i][1],
                     y[2] - priors[i] * r[i][2]};
        g = std::max(g, priors[i] + norm3(d));
    }
    return g;
}

// Deterministic Nelder-Mead in three variables; good enough to polish the
// convex dual objective to ~1e-12 from a warm start.
Vec3 nelder_mead3(const std::function<double(const Vec3&)>& f, const Vec3& start, double scale,
                  int iters) {
    std::array<Vec3, 4> pts{start, start, start, start};
    for (int i = 0; i < 3; ++i) pts[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] += scale;
    std::array<double, 4> vals{};
    for (int i = 0; i < 4; ++i) vals[static_cast<std::size_t>(i)] = f(pts[static_cast<std::size_t>(i)]);

    auto order = [&]() {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (vals[static_cast<std::size_t>(b)] < vals[static_cast<std::size_t>(a)]) {
                    std::swap(vals[static_cast<std::size_t>(a)], vals[static_cast<std::size_t>(b)]);
                    std::swap(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]);
                }
    };
    auto blend = [](const Vec3& a, const Vec3& b, double t) {
        return Vec3{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
    };

    for (int k = 0; k < iters; ++k) {
        order();
        const Vec3 centroid{(pts[0][0] + pts[1][0] + pts[2][0]) / 3.0,
                            (pts[0][1] + pts[1][1] + pts[2][1]) / 3.0,
                            (pts[0][2] + pts[1][2] + pts[2][2]) / 3.0};
        const Vec3 refl = blend(pts[3], centroid, 2.0);
        const double frefl = f(refl);
        if (frefl < vals[0]) {
            const Vec3 expanded = blend(pts[3], centroid, 3.0);
            const double fexp = f(expanded);
            if (fexp < frefl) {
                pts[3] = expanded;
                vals[3] = fexp;
            } else {
                pts[3] = refl;
                vals[3] = frefl;
            }
        } else if (frefl < vals[2]) {
            pts[3] = refl;
            vals[3] = frefl;
        } else {
            const Vec3 contr = blend(pts[3], centroid, 0.5);
            const double fcontr = f(contr);
            if (fcontr < vals[3]) {
                pts[3] = contr;
                vals[3] = fcontr;
            } else {
                for (int i = 1; i < 4; ++i) {
                    pts[static_cast<std::size_t>(i)] = blend(pts[0], pts[static_cast<std::size_t>(i)], 0.5);
                    vals[static_cast<std::size_t>(i)] = f(pts[static_cast<std::size_t>(i)]);
                }
            }
        }
        double spread = 0.0;
        for (int i = 1; i < 4; ++i) {
            const Vec3 d{pts[static_cast<std::size_t>(i)][0] - pts[0][0],
                         pts[static_cast<std::size_t>(i)][1] - pts[0][1],
                         pts[static_cast<std::size_t>(i)][2] - pts[0][2]};
            spread = std::max(spread, norm3(d));
        }
        if (spread < 1e-14) break;
    }
    order();
    return pts[0];
}

void project_affine(std::vector<Mat2>& ms) {
    Mat2 defect;
    for (const auto& m : ms) defect += m;
    defect -= Mat2::identity();
    defect *= 1.0 / static_cast<double>(ms.size());
    for (auto& m : ms) m -= defect;
}

// Dykstra alternating projections onto {sum M_i = I} and the product of PSD
// cones; converges to the exact Frobenius projection.
void project_povm(std::vector<Mat2>& ms, int max_iters = 120, double tol = 1e-17) {
    const std::size_t n = ms.size();
    std::vector<Mat2> corr(n);
    for (int it = 0; it < max_iters; ++it) {
        project_affine(ms);
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Mat2 shifted = ms[i] + corr[i];
            const Mat2 clipped = psd_clip(hermitize(shifted));
            corr[i] = shifted - clipped;
            delta = std::max(delta, max_abs_diff(clipped, ms[i]));
            ms[i] = clipped;
        }
        if (delta < tol) break;
    }
}

} // namespace

DiscriminationResult min_error_sdp(const DiscriminationProblem& problem, double tol) {
    if (!(std::isfinite(tol) && tol > 0.0)) throw InvalidInput("min_error_sdp: tol must be > 0");
    const std::size_t n = problem.size();
    const auto& priors = problem.priors();

    std::vector<Mat2> weighted(n); // p_i rho_i, the constant objective gradient
    std::vector<Vec3> bloch(n);
    for (std::size_t i = 0; i < n; ++i) {
        weighted[i] = problem.states()[i].matrix() * priors[i];
        const BlochView v = BlochView::of(problem.states()[i].matrix());
        bloch[i] = {v.rx, v.ry, v.rz};
    }

    auto primal_value = [&](const std::vector<Mat2>& ms) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += (weighted[i] * ms[i]).trace().real();
        return v;
    };

    // y-parametrized feasible dual operator (g(y) I + y . sigma)/2.
    auto dual_matrix = [&](const Vec3& y, double g) {
        return BlochView{g, y[0], y[1], y[2]}.matrix();
    };

    const double step = 2.0;
    const double target_gap = std::min(tol, 1e-10);
    const int max_outer = 40000;
    const int check_every = 25;

    std::vector<Mat2> feas(n, Mat2::identity() * (1.0 / static_cast<double>(n)));
    std::vector<Mat2> accel = feas;
    double momentum_t = 1.0;

    double best_dual = std::numeric_limits<double>::infinity();
    Mat2 best_dual_op;
    double value = primal_value(feas);
    int outer = 0;

    for (outer = 1; outer <= max_outer; ++outer) {
        std::vector<Mat2> trial(n);
        for (std::size_t i = 0; i < n; ++i) trial[i] = accel[i] + weighted[i] * step;
        project_povm(trial);

        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum_t * momentum_t));
        const double mix = (momentum_t - 1.0) / t_next;
        for (std::size_t i = 0; i < n; ++i)
            accel[i] = trial[i] + (trial[i] - feas[i]) * mix;
        feas = std::move(trial);
        momentum_t = t_next;

        if (outer % check_every != 0 && outer != max_outer) continue;

        value = primal_value(feas);

        // Dual candidate from the primal iterate: Y0 = sym(sum p_i rho_i M_i),
        // shifted along I by the smallest amount that makes it dominate every
        // p_i rho_i (t may be negative, which tightens the trace).
        Mat2 y0;
        for (std::size_t i = 0; i < n; ++i) y0 += weighted[i] * feas[i];
        y0 = hermitize(y0);
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
            shift = std::max(shift, -min_eigenvalue(y0 - weighted[i]));
        Mat2 shifted = y0;
        shifted(0, 0) += shift;
        shifted(1, 1) += shift;
        if (shifted.trace().real() < best_dual) {
            best_dual = shifted.trace().real();
            best_dual_op = shifted;
        }

        // Polish the traceless part of the dual in Bloch coordinates; every
        // candidate is feasible by construction, so any improvement is safe.
        const BlochView yv = BlochView::of(shifted);
        auto objective = [&](const Vec3& y) { return dual_trace(y, bloch, priors); };
        const Vec3 polished = nelder_mead3(objective, Vec3{yv.rx, yv.ry, yv.rz}, 0.05, 600);
        const double polished_trace = dual_trace(polished, bloch, priors);
        if (polished_trace < best_dual) {
            best_dual = polished_trace;
            best_dual_op = dual_matrix(polished, polished_trace);
        }

        if (best_dual - value < target_gap) break;
    }

    const double gap = best_dual - value;
    if (!(gap < tol)) {
        std::ostringstream os;
        os << "min_error_sdp: duality gap " << gap << " did not reach tolerance " << tol
           << " within " << max_outer << " iterations";
        throw NumericalFailure(os.str());
    }

    for (auto& m : feas) m = hermitize(m);
    return DiscriminationResult{std::move(feas), value, best_dual_op, gap, outer};
}

} // namespace spinboost
