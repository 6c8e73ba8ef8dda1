#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace spinboost {

using cplx = std::complex<double>;

// Dense complex 2x2 matrix, row-major. Value type used for spin operators,
// density matrices and POVM effects throughout.
struct Mat2 {
    std::array<cplx, 4> e{};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return Mat2{{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)}}; }
    static Mat2 from_rows(cplx a, cplx b, cplx c, cplx d) { return Mat2{{a, b, c, d}}; }

    cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    Mat2& operator+=(const Mat2& o) {
        for (int i = 0; i < 4; ++i) e[i] += o.e[i];
        return *this;
    }
    Mat2& operator-=(const Mat2& o) {
        for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
        return *this;
    }
    Mat2& operator*=(double s) {
        for (auto& x : e) x *= s;
        return *this;
    }
    Mat2& operator*=(cplx s) {
        for (auto& x : e) x *= s;
        return *this;
    }

    friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
    friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
    friend Mat2 operator*(Mat2 a, double s) { return a *= s; }
    friend Mat2 operator*(double s, Mat2 a) { return a *= s; }
    friend Mat2 operator*(Mat2 a, cplx s) { return a *= s; }
    friend Mat2 operator*(cplx s, Mat2 a) { return a *= s; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 r;
        r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
        r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
        r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
        r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
        return r;
    }

    Mat2 adjoint() const {
        return Mat2{{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
    }

    cplx trace() const { return e[0] + e[3]; }
    cplx det() const { return e[0] * e[3] - e[1] * e[2]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : e) m = std::max(m, std::abs(x));
        return m;
    }
};

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

// Hilbert-Schmidt inner product Tr(A^dag B).
inline cplx hs_inner(const Mat2& a, const Mat2& b) {
    cplx s = 0;
    for (int i = 0; i < 4; ++i) s += std::conj(a.e[i]) * b.e[i];
    return s;
}

inline bool is_hermitian(const Mat2& m, double tol = 1e-12) {
    return std::abs(m(0, 0).imag()) <= tol && std::abs(m(1, 1).imag()) <= tol &&
           std::abs(m(0, 1) - std::conj(m(1, 0))) <= tol;
}

// Exact symmetrization (A + A^dag)/2.
inline Mat2 hermitize(const Mat2& m) {
    Mat2 r;
    r(0, 0) = cplx(m(0, 0).real(), 0.0);
    r(1, 1) = cplx(m(1, 1).real(), 0.0);
    r(0, 1) = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    r(1, 0) = std::conj(r(0, 1));
    return r;
}

struct EigPair {
    double lo;
    double hi;
};

// Closed-form eigenvalues of a Hermitian 2x2 matrix (imaginary parts of the
// diagonal are ignored; caller guarantees Hermiticity).
inline EigPair hermitian_eigenvalues(const Mat2& m) {
    const double h00 = m(0, 0).real();
    const double h11 = m(1, 1).real();
    const double mid = 0.5 * (h00 + h11);
    const double r = std::sqrt(0.25 * (h00 - h11) * (h00 - h11) + std::norm(m(0, 1)));
    return {mid - r, mid + r};
}

inline double min_eigenvalue(const Mat2& m) { return hermitian_eigenvalues(m).lo; }

// Nearest PSD matrix in Frobenius norm: clip negative eigenvalues.
// Uses the spectral identity P_hi = (M - lo*I)/(hi - lo), avoiding explicit
// eigenvectors.
inline Mat2 psd_clip(const Mat2& m) {
    const auto [lo, hi] = hermitian_eigenvalues(m);
    if (lo >= 0.0) return m;
    if (hi <= 0.0) return Mat2::zero();
    Mat2 p = m;
    p(0, 0) -= lo;
    p(1, 1) -= lo;
    return p * (hi / (hi - lo));
}

} // namespace spinboost
