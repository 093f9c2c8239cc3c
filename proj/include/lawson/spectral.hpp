#pragma once

// Separated Laplace-Beltrami eigenproblem on T_{a,b,c}. With
// psi(x, y) = phi(y) {sin, cos}(l x) the eigenvalue equation becomes
//
//   (1 + Q / 2P) phi'' + P' / (2P) phi' + (lambda - l^2 / P) phi = 0,
//
// which in self-adjoint form reads -(p phi')' + q phi = lambda w phi with
//
//   p = sqrt(2P + Q),  q = 2 l^2 / sqrt(2P + Q),  w = 2P / sqrt(2P + Q).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lawson/pencil.hpp"
#include "lawson/surface.hpp"

namespace lawson {

/// Boundary/parity class of the separated problem.
///
/// EvenInY / OddInY reflect about y = 0 (and y = pi); the *AboutHalfPi
/// variants reflect about y = pi/2 (and 3pi/2). PiPeriodic / PiAntiperiodic
/// impose phi(y + pi) = +-phi(y).
enum class Symmetry {
    FullPeriodic,
    EvenInY,
    OddInY,
    EvenAboutHalfPi,
    OddAboutHalfPi,
    PiPeriodic,
    PiAntiperiodic,
};

std::string to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& name);

struct SLCoefficients {
    Coefficients surface;
    int l = 0;

    double p(double y) const;
    double dp(double y) const;
    double q(double y) const;
    double w(double y) const;
};

SLCoefficients sl_coefficients(const Triple& t, int l);

struct SLProblem {
    Triple triple;
    int l = 0;
    Symmetry symmetry = Symmetry::FullPeriodic;
};

struct SpectrumResult {
    std::vector<double> eigenvalues;
    int grid_n = 0;
    Symmetry symmetry = Symmetry::FullPeriodic;
};

/// Conservative three-point discretization of the separated problem on the
/// symmetry domain. `grid_n` is the number of nodes per 2pi period (so every
/// symmetry class shares the mesh width 2pi / grid_n); it must be a multiple
/// of 4 and at least 256.
JacobiPencil assemble(const SLProblem& problem, int grid_n);

/// The lowest `count` eigenvalues of the discretized problem.
SpectrumResult sl_spectrum(const SLProblem& problem, int grid_n, int count = 8);

/// |lambda_0(c) - 2|, |lambda_1(max(a,b)) - 2|, |lambda_2(min(a,b)) - 2| from
/// full periodic spectra. lambda_0(c) is absent for Lawson surfaces (c is
/// irrational and the third immersion component vanishes).
struct AnchorResiduals {
    std::optional<double> lambda0_c;
    double lambda1_max = 0.0;
    double lambda2_min = 0.0;

    double max() const;
};

AnchorResiduals anchor_check(const Triple& t, int grid_n);

/// Residual of the separated equation at lambda = 2 for the closed-form
/// profile of immersion component pair `which` (1, 2 or 3), with l set to the
/// matching frequency a, b or c. Max over 1024 points in y.
double component_residual(const Triple& t, int which);

/// Residual of the trigonometric Lame equation with n = 1 for the solution
/// selected by h_index: 0 -> sqrt(1 - k^2 sin^2 y) at h = k^2, 1 -> cos y at
/// h = 1, 2 -> sin y at h = 1 + k^2. Max over 1024 points.
double lame_residual(double k2, int h_index);

/// max |Delta_h F^i - 2 F^i| over a grid_n x grid_n periodic grid, with the
/// Laplace-Beltrami operator of the induced metric discretized by five-point
/// central differences.
double takahashi_residual(const Triple& t, int grid_n);

class IndeterminateCount : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CountReport {
    int n2 = 0;
    std::vector<std::pair<int, int>> per_l_counts;
    double epsilon = 0.0;
    int j_closed = 0;
    bool agree = false;
    /// Filter used for even and odd l.
    Symmetry even_filter = Symmetry::FullPeriodic;
    Symmetry odd_filter = Symmetry::FullPeriodic;
    /// Last l summed, and the full periodic lambda_0 just beyond it.
    int l_last = 0;
    double lambda0_beyond = 0.0;
    /// Full periodic lambda_3(0); must exceed 2.
    double lambda3_at_0 = 0.0;
};

/// N(2) = #{lambda < 2} for the surface, assembled from the filtered separated
/// spectra: l = 0 contributes once, every l >= 1 twice (sin lx and cos lx).
/// Throws IndeterminateCount when a non-anchor eigenvalue lies within epsilon of 2,
/// std::invalid_argument when grid_n < 2048.
CountReport count_N2(const Triple& t, int grid_n);

/// Filters (even l, odd l) that the surface's identification imposes on the
/// separated problem; FullPeriodic for one-to-one surfaces.
std::pair<Symmetry, Symmetry> parity_filters(const Triple& t);

/// Sturm ordering lambda_0(l) < lambda_1(l) <= lambda_2(l) < lambda_3(l) <= lambda_4(l)
/// and monotonicity lambda_i(l) < lambda_i(l + 1) for i <= 3, l <= l_max.
bool interlacing_check(const Triple& t, int grid_n, int l_max);

}  // namespace lawson
