#include "lawson/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lawson {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kResidualPoints = 1024;

struct Domain {
    double y0;      // coordinate of the first node
    int nodes;      // number of unknowns
    bool cyclic;    // wraparound coupling between last and first unknown
    double wrap;    // +1 periodic, -1 antiperiodic
    bool neumann;   // reflection with half cells at both ends
};

Domain domain_for(Symmetry s, int grid_n) {
    const double h = 2.0 * kPi / grid_n;
    const int half = grid_n / 2;
    switch (s) {
        case Symmetry::FullPeriodic: return {0.0, grid_n, true, 1.0, false};
        case Symmetry::PiPeriodic: return {0.0, half, true, 1.0, false};
        case Symmetry::PiAntiperiodic: return {0.0, half, true, -1.0, false};
        case Symmetry::EvenInY: return {0.0, half + 1, false, 0.0, true};
        case Symmetry::OddInY: return {h, half - 1, false, 0.0, false};
        case Symmetry::EvenAboutHalfPi: return {0.5 * kPi, half + 1, false, 0.0, true};
        case Symmetry::OddAboutHalfPi: return {0.5 * kPi + h, half - 1, false, 0.0, false};
    }
    throw std::logic_error("unknown symmetry");
}

int anchor_slots(const Triple& t, int l) {
    int slots = 0;
    if (t.a == l) ++slots;
    if (t.b == l) ++slots;
    if (!t.is_lawson() && t.c == l) ++slots;
    return slots;
}

int last_frequency(const Triple& t) {
    return t.is_lawson() ? static_cast<int>(std::ceil(t.c_real() - 1e-12)) : static_cast<int>(t.c);
}

// Lowest eigenvalues, extended until at least one exceeds `bound` (so that
// every eigenvalue below the bound is present).
std::vector<double> spectrum_past(const SLProblem& problem, int grid_n, double bound) {
    int count = 8;
    for (;;) {
        SpectrumResult r = sl_spectrum(problem, grid_n, count);
        if (r.eigenvalues.empty() || r.eigenvalues.back() > bound ||
            r.eigenvalues.size() < static_cast<std::size_t>(count)) {
            return r.eigenvalues;
        }
        count *= 2;
    }
}

}  // namespace

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::FullPeriodic: return "full-periodic";
        case Symmetry::EvenInY: return "even";
        case Symmetry::OddInY: return "odd";
        case Symmetry::EvenAboutHalfPi: return "even-half-pi";
        case Symmetry::OddAboutHalfPi: return "odd-half-pi";
        case Symmetry::PiPeriodic: return "pi-periodic";
        case Symmetry::PiAntiperiodic: return "pi-antiperiodic";
    }
    return "?";
}

Symmetry parse_symmetry(const std::string& name) {
    for (Symmetry s : {Symmetry::FullPeriodic, Symmetry::EvenInY, Symmetry::OddInY, Symmetry::EvenAboutHalfPi,
                       Symmetry::OddAboutHalfPi, Symmetry::PiPeriodic, Symmetry::PiAntiperiodic}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown symmetry '" + name + "'");
}

double SLCoefficients::p(double y) const { return std::sqrt(2.0 * surface.P(y) + surface.Q); }

double SLCoefficients::dp(double y) const { return surface.dP(y) / p(y); }

double SLCoefficients::q(double y) const { return 2.0 * l * l / p(y); }

double SLCoefficients::w(double y) const { return 2.0 * surface.P(y) / p(y); }

SLCoefficients sl_coefficients(const Triple& t, int l) {
    if (l < 0) throw std::invalid_argument("separation parameter l must be non-negative");
    return SLCoefficients{coefficients(t), l};
}

JacobiPencil assemble(const SLProblem& problem, int grid_n) {
    if (grid_n < 256 || grid_n % 4 != 0) {
        throw std::invalid_argument("grid_n must be a multiple of 4 and at least 256");
    }
    const SLCoefficients co = sl_coefficients(problem.triple, problem.l);
    const Domain d = domain_for(problem.symmetry, grid_n);
    const double h = 2.0 * kPi / grid_n;
    const int n = d.nodes;

    JacobiPencil pencil;
    pencil.conductance.resize(n - 1);
    pencil.potential.resize(n);
    pencil.weight.resize(n);
    for (int i = 0; i < n; ++i) {
        const double y = d.y0 + i * h;
        pencil.potential[i] = co.q(y) * h;
        pencil.weight[i] = co.w(y) * h;
        if (i + 1 < n) pencil.conductance[i] = co.p(y + 0.5 * h) / h;
    }
    const double y_end = d.y0 + (n - 1) * h;
    if (d.neumann) {
        // Mirror images of the end nodes fold back onto the interior: only
        // the inward flux and half of each end cell remain.
        pencil.potential[0] *= 0.5;
        pencil.weight[0] *= 0.5;
        pencil.potential[n - 1] *= 0.5;
        pencil.weight[n - 1] *= 0.5;
    } else if (d.cyclic) {
        pencil.wrap_conductance = co.p(y_end + 0.5 * h) / h;
        pencil.wrap_sign = d.wrap;
    } else {
        // Dirichlet: the bond to the pinned boundary node acts as a potential.
        pencil.potential[0] += co.p(d.y0 - 0.5 * h) / h;
        pencil.potential[n - 1] += co.p(y_end + 0.5 * h) / h;
    }
    return pencil;
}

SpectrumResult sl_spectrum(const SLProblem& problem, int grid_n, int count) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    const JacobiPencil pencil = assemble(problem, grid_n);
    SpectrumResult r;
    r.eigenvalues = pencil.lowest(static_cast<std::size_t>(count), grid_n);
    r.grid_n = grid_n;
    r.symmetry = problem.symmetry;
    for (double v : r.eigenvalues) {
        if (!std::isfinite(v)) {
            throw NumericError("non-finite eigenvalue at grid " + std::to_string(grid_n), grid_n);
        }
    }
    return r;
}

double AnchorResiduals::max() const {
    return std::max({lambda0_c.value_or(0.0), lambda1_max, lambda2_min});
}

AnchorResiduals anchor_check(const Triple& t, int grid_n) {
    auto eigen = [&](std::int64_t l, int index) {
        const SpectrumResult r = sl_spectrum({t, static_cast<int>(l), Symmetry::FullPeriodic}, grid_n, index + 1);
        return r.eigenvalues[index];
    };
    AnchorResiduals res;
    if (!t.is_lawson()) res.lambda0_c = std::abs(eigen(t.c, 0) - 2.0);
    res.lambda1_max = std::abs(eigen(std::max(t.a, t.b), 1) - 2.0);
    res.lambda2_min = std::abs(eigen(std::min(t.a, t.b), 2) - 2.0);
    return res;
}

double component_residual(const Triple& t, int which) {
    if (which < 1 || which > 3) throw std::invalid_argument("which must be 1, 2 or 3");
    const Coefficients co = coefficients(t);
    if (which == 3 && co.c3_sq == 0.0) return 0.0;

    double l = 0.0;
    double amp = 0.0;
    switch (which) {
        case 1: l = static_cast<double>(t.a); amp = std::sqrt(co.c1_sq); break;
        case 2: l = static_cast<double>(t.b); amp = std::sqrt(co.c2_sq); break;
        default: l = t.c_real(); amp = std::sqrt(co.c3_sq); break;
    }
    double worst = 0.0;
    for (int i = 0; i < kResidualPoints; ++i) {
        const double y = 2.0 * kPi * i / kResidualPoints;
        const double sn = std::sin(y);
        const double cs = std::cos(y);
        double f = 0.0, df = 0.0, d2f = 0.0;
        switch (which) {
            case 1: f = amp * sn; df = amp * cs; d2f = -amp * sn; break;
            case 2: f = amp * cs; df = -amp * sn; d2f = -amp * cs; break;
            default: {
                const double s = 1.0 - co.k2 * sn * sn;
                const double ds = -co.k2 * std::sin(2.0 * y);
                const double d2s = -2.0 * co.k2 * std::cos(2.0 * y);
                const double r = std::sqrt(s);
                f = amp * r;
                df = amp * ds / (2.0 * r);
                d2f = amp * (d2s / (2.0 * r) - ds * ds / (4.0 * s * r));
                break;
            }
        }
        const double P = co.P(y);
        const double residual =
            (1.0 + co.Q / (2.0 * P)) * d2f + co.dP(y) / (2.0 * P) * df + (2.0 - l * l / P) * f;
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

double lame_residual(double k2, int h_index) {
    if (!(k2 < 1.0)) throw std::domain_error("lame_residual requires k^2 < 1");
    if (h_index < 0 || h_index > 2) throw std::invalid_argument("h_index must be 0, 1 or 2");
    const double h = h_index == 0 ? k2 : (h_index == 1 ? 1.0 : 1.0 + k2);
    double worst = 0.0;
    for (int i = 0; i < kResidualPoints; ++i) {
        const double y = 2.0 * kPi * i / kResidualPoints;
        const double sn = std::sin(y);
        const double cs = std::cos(y);
        double f = 0.0, df = 0.0, d2f = 0.0;
        switch (h_index) {
            case 0: {
                const double s = 1.0 - k2 * sn * sn;
                const double ds = -2.0 * k2 * sn * cs;
                const double d2s = -2.0 * k2 * (cs * cs - sn * sn);
                const double r = std::sqrt(s);
                f = r;
                df = ds / (2.0 * r);
                d2f = d2s / (2.0 * r) - ds * ds / (4.0 * s * r);
                break;
            }
            case 1: f = cs; df = -sn; d2f = -cs; break;
            default: f = sn; df = cs; d2f = -sn; break;
        }
        const double residual = (1.0 - k2 * sn * sn) * d2f - k2 * sn * cs * df + (h - 2.0 * k2 * sn * sn) * f;
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

double takahashi_residual(const Triple& t, int grid_n) {
    if (grid_n < 128) throw std::invalid_argument("takahashi_residual needs grid_n >= 128");
    const Coefficients co = coefficients(t);
    const int n = grid_n;
    const double h = 2.0 * kPi / n;

    std::vector<Point6> F(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> const Point6& {
        return F[static_cast<std::size_t>((i + n) % n) * n + static_cast<std::size_t>((j + n) % n)];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) F[static_cast<std::size_t>(i) * n + j] = immersion(t, co, i * h, j * h);
    }

    // sqrt(det g) g^xx = alpha(y), sqrt(det g) g^yy = beta(y), sqrt(det g) = P alpha.
    auto alpha = [&](double y) { return std::sqrt(2.0 / (co.Q + 2.0 * co.P(y))); };
    auto beta = [&](double y) { return std::sqrt(0.5 * (co.Q + 2.0 * co.P(y))); };

    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const double y = j * h;
        const double a = alpha(y);
        const double vol = co.P(y) * a;
        const double b_up = beta(y + 0.5 * h);
        const double b_dn = beta(y - 0.5 * h);
        for (int i = 0; i < n; ++i) {
            const Point6& f = at(i, j);
            const Point6& fxp = at(i + 1, j);
            const Point6& fxm = at(i - 1, j);
            const Point6& fyp = at(i, j + 1);
            const Point6& fym = at(i, j - 1);
            for (int k = 0; k < 6; ++k) {
                const double fxx = (fxp[k] - 2.0 * f[k] + fxm[k]) / (h * h);
                const double flux = (b_up * (fyp[k] - f[k]) - b_dn * (f[k] - fym[k])) / (h * h);
                const double lap = -(a * fxx + flux) / vol;
                worst = std::max(worst, std::abs(lap - 2.0 * f[k]));
            }
        }
    }
    return worst;
}

std::pair<Symmetry, Symmetry> parity_filters(const Triple& t) {
    if (covering_degree(subcase_of(t)) == 1) return {Symmetry::FullPeriodic, Symmetry::FullPeriodic};
    // The identification that actually fixes F decides the filter; which slot
    // holds the odd entry depends on the orientation of the triple.
    for (Identification phi : {Identification::Phi1, Identification::Phi2, Identification::Phi3}) {
        if (symmetry_residual(t, phi, 16) <= 1e-12) {
            switch (phi) {
                case Identification::Phi1: return {Symmetry::EvenAboutHalfPi, Symmetry::OddAboutHalfPi};
                case Identification::Phi2: return {Symmetry::EvenInY, Symmetry::OddInY};
                case Identification::Phi3: return {Symmetry::PiPeriodic, Symmetry::PiAntiperiodic};
            }
        }
    }
    throw std::logic_error("double cover without an identification: " + to_string(t));
}

CountReport count_N2(const Triple& t, int grid_n) {
    if (grid_n < 2048) throw std::invalid_argument("counting needs grid_n >= 2048");
    CountReport report;
    const auto [even_filter, odd_filter] = parity_filters(t);
    report.even_filter = even_filter;
    report.odd_filter = odd_filter;

    const AnchorResiduals anchors = anchor_check(t, grid_n);
    const double eps = std::max(10.0 * anchors.max(), 1e-6);
    report.epsilon = eps;

    report.l_last = last_frequency(t);
    for (int l = 0; l <= report.l_last; ++l) {
        const Symmetry sym = (l % 2 == 0) ? even_filter : odd_filter;
        const std::vector<double> ev = spectrum_past({t, l, sym}, grid_n, 2.0 + eps);
        int below = 0;
        int near = 0;
        for (double v : ev) {
            if (v < 2.0 - eps) {
                ++below;
            } else if (v <= 2.0 + eps) {
                ++near;
            }
        }
        if (near > anchor_slots(t, l)) {
            throw IndeterminateCount("indeterminate count; refine grid (eigenvalue within " + std::to_string(eps) +
                                     " of 2 at l = " + std::to_string(l) + ")");
        }
        report.per_l_counts.emplace_back(l, below);
        report.n2 += (l == 0 ? 1 : 2) * below;
    }

    report.lambda0_beyond =
        sl_spectrum({t, report.l_last + 1, Symmetry::FullPeriodic}, grid_n, 1).eigenvalues.front();
    if (!(report.lambda0_beyond > 2.0 + eps)) {
        throw IndeterminateCount("truncation bound violated: lambda_0(" + std::to_string(report.l_last + 1) +
                                 ") = " + std::to_string(report.lambda0_beyond) + " is not above 2");
    }
    report.lambda3_at_0 = sl_spectrum({t, 0, Symmetry::FullPeriodic}, grid_n, 4).eigenvalues[3];
    if (!(report.lambda3_at_0 > 2.0 + eps)) {
        throw IndeterminateCount("lambda_3(0) = " + std::to_string(report.lambda3_at_0) + " is not above 2");
    }

    report.j_closed = extremal_index(t).j;
    report.agree = report.n2 == report.j_closed;
    return report;
}

bool interlacing_check(const Triple& t, int grid_n, int l_max) {
    constexpr double tol = 1e-6;
    std::vector<std::vector<double>> spectra;
    for (int l = 0; l <= l_max; ++l) {
        spectra.push_back(sl_spectrum({t, l, Symmetry::FullPeriodic}, grid_n, 5).eigenvalues);
    }
    for (const auto& ev : spectra) {
        // lambda_0 < lambda_1 <= lambda_2 < lambda_3 <= lambda_4
        if (!(ev[1] - ev[0] > tol)) return false;
        if (!(ev[2] - ev[1] >= -tol)) return false;
        if (!(ev[3] - ev[2] > tol)) return false;
        if (!(ev[4] - ev[3] >= -tol)) return false;
    }
    for (int l = 0; l < l_max; ++l) {
        for (int i = 0; i <= 3; ++i) {
            if (!(spectra[l + 1][i] - spectra[l][i] > tol)) return false;
        }
    }
    return true;
}

}  // namespace lawson
