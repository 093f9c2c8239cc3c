#include "lawson/pencil.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace lawson {

namespace {

constexpr lapack_int kBand = 2;
constexpr int kInverseSteps = 3;

// Position of original unknown i in the interleaved order 0, n-1, 1, n-2, ...
std::size_t interleaved(std::size_t i, std::size_t n) { return 2 * i < n ? 2 * i : 2 * (n - 1 - i) + 1; }

// Visits every stored entry (i, j, value) of A - sigma W with i <= j.
template <typename Visit>
void for_each_entry(const JacobiPencil& p, double sigma, Visit&& visit) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        visit(i, i, p.diag(i) - sigma * p.weight[i]);
        if (i + 1 < n) visit(i, i + 1, p.off(i));
    }
    if (n > 1 && p.wrap_conductance != 0.0) visit(std::size_t{0}, n - 1, p.corner());
}

class BandedShiftSolver {
public:
    BandedShiftSolver(const JacobiPencil& p, double sigma)
        : n_(p.size()), ab_(static_cast<std::size_t>(kLdab) * n_, 0.0), ipiv_(n_) {
        auto put = [&](std::size_t i, std::size_t j, double v) {
            const std::size_t r = interleaved(i, n_);
            const std::size_t c = interleaved(j, n_);
            at(r, c) += v;
            if (r != c) at(c, r) += v;
        };
        for_each_entry(p, sigma, put);
        info_ = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, static_cast<lapack_int>(n_), static_cast<lapack_int>(n_), kBand,
                               kBand, ab_.data(), kLdab, ipiv_.data());
    }

    bool ok() const { return info_ == 0; }

    /// Overwrites rhs (original ordering) with (A - sigma W)^{-1} rhs.
    void solve(std::vector<double>& rhs) const {
        std::vector<double> b(n_);
        for (std::size_t i = 0; i < n_; ++i) b[interleaved(i, n_)] = rhs[i];
        LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(n_), kBand, kBand, 1, ab_.data(), kLdab,
                       ipiv_.data(), b.data(), static_cast<lapack_int>(n_));
        for (std::size_t i = 0; i < n_; ++i) rhs[i] = b[interleaved(i, n_)];
    }

private:
    static constexpr lapack_int kLdab = 3 * kBand + 1;

    double& at(std::size_t r, std::size_t c) {
        return ab_[static_cast<std::size_t>(2 * kBand) + r - c + c * static_cast<std::size_t>(kLdab)];
    }

    std::size_t n_;
    std::vector<double> ab_;
    std::vector<lapack_int> ipiv_;
    lapack_int info_ = 0;
};

std::vector<double> banded_lowest(const JacobiPencil& p, std::size_t m, int grid_n) {
    const std::size_t n = p.size();
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = 1.0 / std::sqrt(p.weight[i]);

    // Upper band storage of W^{-1/2} A W^{-1/2}: ab[kd + r - c + c * ldab] = B(r, c), r <= c.
    const lapack_int ldab = kBand + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
    for_each_entry(p, 0.0, [&](std::size_t i, std::size_t j, double v) {
        std::size_t r = interleaved(i, n);
        std::size_t c = interleaved(j, n);
        if (r > c) std::swap(r, c);
        ab[static_cast<std::size_t>(kBand) + r - c + c * static_cast<std::size_t>(ldab)] += v * scale[i] * scale[j];
    });

    std::vector<double> values(n);
    std::vector<lapack_int> ifail(n);
    double q_unused = 0.0;
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dsbevx(
        LAPACK_COL_MAJOR, 'N', 'I', 'U', static_cast<lapack_int>(n), kBand, ab.data(), ldab, &q_unused, 1, 0.0,
        0.0, 1, static_cast<lapack_int>(m), 2.0 * LAPACKE_dlamch('S'), &found, values.data(), nullptr, 1,
        ifail.data());
    if (info != 0 || found != static_cast<lapack_int>(m)) {
        throw NumericError("banded eigensolver failed (info " + std::to_string(info) + ") at grid " +
                               std::to_string(grid_n),
                           grid_n);
    }
    values.resize(m);
    return values;
}

}  // namespace

double JacobiPencil::diag(std::size_t i) const {
    const std::size_t n = size();
    double d = potential[i];
    if (i > 0) d += conductance[i - 1];
    if (i + 1 < n) d += conductance[i];
    if (n > 1 && (i == 0 || i == n - 1)) d += wrap_conductance;
    return d;
}

double JacobiPencil::energy(const std::vector<double>& x) const {
    const std::size_t n = size();
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i + 1] - x[i];
        e += conductance[i] * d * d;
    }
    if (n > 1 && wrap_conductance != 0.0) {
        const double d = x[0] - wrap_sign * x[n - 1];
        e += wrap_conductance * d * d;
    }
    for (std::size_t i = 0; i < n; ++i) e += potential[i] * x[i] * x[i];
    return e;
}

double JacobiPencil::mass(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += weight[i] * x[i] * x[i];
    return s;
}

std::vector<double> JacobiPencil::lowest(std::size_t m, int grid_n) const {
    const std::size_t n = size();
    if (n == 0 || m == 0) return {};
    if (conductance.size() + 1 != n || potential.size() != n) {
        throw NumericError("inconsistent pencil dimensions at grid " + std::to_string(grid_n), grid_n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(weight[i] > 0.0) || !std::isfinite(weight[i]) || !std::isfinite(potential[i])) {
            throw NumericError("non-positive or non-finite pencil entry at grid " + std::to_string(grid_n), grid_n);
        }
    }
    m = std::min(m, n);
    const std::vector<double> rough = banded_lowest(*this, m, grid_n);

    // Polish. Vectors of (nearly) coincident eigenvalues are kept
    // W-orthogonal so that a degenerate pair yields two distinct vectors.
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<std::vector<double>> vectors;
    std::vector<double> refined(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double sigma = rough[k];
        const double cluster = 1e-6 * std::max(1.0, std::abs(sigma));
        BandedShiftSolver solver(*this, sigma);
        if (!solver.ok()) {
            // Exactly singular shift: the rough value is already an eigenvalue to working precision.
            refined[k] = sigma;
            vectors.emplace_back(n, 0.0);
            continue;
        }
        std::vector<double> x(n);
        for (double& v : x) v = uniform(rng);
        for (int step = 0; step < kInverseSteps; ++step) {
            for (std::size_t i = 0; i < n; ++i) x[i] *= weight[i];
            solver.solve(x);
            for (std::size_t j = 0; j < k; ++j) {
                if (std::abs(rough[j] - sigma) > cluster) continue;
                const std::vector<double>& u = vectors[j];
                double dot = 0.0;
                double uu = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    dot += weight[i] * u[i] * x[i];
                    uu += weight[i] * u[i] * u[i];
                }
                if (uu > 0.0) {
                    for (std::size_t i = 0; i < n; ++i) x[i] -= dot / uu * u[i];
                }
            }
            const double norm = std::sqrt(mass(x));
            if (!(norm > 0.0) || !std::isfinite(norm)) break;
            for (double& v : x) v /= norm;
        }
        const double rq = energy(x) / mass(x);
        // Keep the polished value only if it is consistent with the rough one.
        const double slack = 1e-6 * std::max(1.0, std::abs(sigma));
        refined[k] = (std::isfinite(rq) && std::abs(rq - sigma) <= slack) ? rq : sigma;
        vectors.push_back(std::move(x));
    }
    std::sort(refined.begin(), refined.end());
    return refined;
}

}  // namespace lawson
