#pragma once

// Test-only reference computations. Nothing here calls into the AGM or the
// banded pencil solver; these are the independent routes the library is checked
// against.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "lawson/pencil.hpp"

namespace lawson::oracle {

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
inline constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double kronrod;
    double error;
};

inline Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {kron * h, std::abs((kron - gauss) * h)};
}

inline double adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
    const Segment whole = gk15(f, a, b);
    if (whole.error <= tol || depth >= 40) return whole.kronrod;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1) + adapt(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod bisection to absolute tolerance `tol`.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13) {
    return detail::adapt(f, a, b, tol, 0);
}

/// K by quadrature of the defining integral after a = sin(theta).
inline double K_quadrature(double k2) {
    return integrate([k2](double t) { return 1.0 / std::sqrt(1.0 - k2 * std::sin(t) * std::sin(t)); }, 0.0,
                     0.5 * std::numbers::pi);
}

inline double E_quadrature(double k2) {
    return integrate([k2](double t) { return std::sqrt(1.0 - k2 * std::sin(t) * std::sin(t)); }, 0.0,
                     0.5 * std::numbers::pi);
}

/// All eigenvalues of the pencil via a dense symmetric eigensolver on
/// W^{-1/2} A W^{-1/2}, ascending.
inline std::vector<double> dense_eigenvalues(const JacobiPencil& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    // Assemble A straight from the quadratic form, one bond at a time.
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    auto bond = [&](Eigen::Index i, Eigen::Index j, double c, double s) {
        A(i, i) += c;
        A(j, j) += c * s * s;
        A(i, j) -= c * s;
        A(j, i) -= c * s;
    };
    for (Eigen::Index i = 0; i + 1 < n; ++i) bond(i + 1, i, p.conductance[i], 1.0);
    if (n > 1) bond(0, n - 1, p.wrap_conductance, p.wrap_sign);
    for (Eigen::Index i = 0; i < n; ++i) A(i, i) += p.potential[i];
    Eigen::VectorXd scale(n);
    for (Eigen::Index i = 0; i < n; ++i) scale(i) = 1.0 / std::sqrt(p.weight[i]);
    const Eigen::MatrixXd B = scale.asDiagonal() * A * scale.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace lawson::oracle
