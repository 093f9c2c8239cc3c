#include "lawson/surface.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "lawson/elliptic.hpp"

namespace lawson {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_even(std::int64_t v) { return v % 2 == 0; }

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Shared by validate and validate_oriented: checks the family conditions and
// reduces by the gcd of the nonzero entries, without reordering.
Triple reduce(Family family, std::int64_t a, std::int64_t b, std::int64_t c) {
    auto in_range = [](std::int64_t v) { return v >= -kMaxEntry && v <= kMaxEntry; };
    if (!in_range(a) || !in_range(b) || (family == Family::Generalized && !in_range(c))) {
        throw InvalidTriple(InvalidTriple::Reason::OutOfRange,
                            "entries must not exceed " + std::to_string(kMaxEntry) + " in absolute value");
    }
    a = std::abs(a);
    b = std::abs(b);
    c = std::abs(c);
    if (family == Family::Lawson) {
        if (a == 0 || b == 0) {
            throw InvalidTriple(InvalidTriple::Reason::Degenerate,
                                "Lawson surfaces need nonzero a and b");
        }
        const std::int64_t g = std::gcd(a, b);
        return Triple{Family::Lawson, a / g, b / g, 0};
    }
    if (a == 0 && b == 0 && c == 0) {
        throw InvalidTriple(InvalidTriple::Reason::Degenerate, "all parameters are zero");
    }
    if (c * c <= a * a + b * b) {
        if (c * c == a * a + b * b) {
            throw InvalidTriple(InvalidTriple::Reason::NotInFamily,
                                "c² must exceed a²+b² (c² = a²+b² is a Lawson surface; use the Lawson case)");
        }
        throw InvalidTriple(InvalidTriple::Reason::NotInFamily, "c² must exceed a²+b²");
    }
    // std::gcd(0, n) == n, so zeros drop out of the reduction.
    const std::int64_t g = std::gcd(std::gcd(a, b), c);
    return Triple{Family::Generalized, a / g, b / g, c / g};
}

}  // namespace

double Triple::c_real() const {
    return family == Family::Lawson ? std::sqrt(static_cast<double>(c2())) : static_cast<double>(c);
}

bool Triple::is_canonical() const { return canonicalize(*this) == *this; }

std::string to_string(const Triple& t) {
    if (t.is_lawson()) {
        return "tau(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
    }
    return "T(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

Triple validate(Family family, std::int64_t a, std::int64_t b, std::int64_t c) {
    return canonicalize(reduce(family, a, b, c));
}

Triple validate_oriented(Family family, std::int64_t a, std::int64_t b, std::int64_t c) {
    return reduce(family, a, b, c);
}

Triple canonicalize(Triple t) {
    t.a = std::abs(t.a);
    t.b = std::abs(t.b);
    t.c = std::abs(t.c);
    if (t.is_lawson()) {
        const std::int64_t g = std::gcd(t.a, t.b);
        if (g > 1) {
            t.a /= g;
            t.b /= g;
        }
        if (t.a < t.b) std::swap(t.a, t.b);
        t.c = 0;
        return t;
    }
    const std::int64_t g = std::gcd(std::gcd(t.a, t.b), t.c);
    if (g > 1) {
        t.a /= g;
        t.b /= g;
        t.c /= g;
    }
    if (t.a > t.b) std::swap(t.a, t.b);
    return t;
}

double Coefficients::P(double y) const {
    return 0.5 * (static_cast<double>(c2) + static_cast<double>(b2 - a2) * std::cos(2.0 * y));
}

double Coefficients::dP(double y) const {
    return -static_cast<double>(b2 - a2) * std::sin(2.0 * y);
}

Coefficients coefficients(const Triple& t) {
    Coefficients co;
    co.a2 = t.a2();
    co.b2 = t.b2();
    co.c2 = t.c2();
    const std::int64_t a2 = co.a2;
    const std::int64_t b2 = co.b2;
    const std::int64_t c2 = co.c2;
    co.Q = static_cast<double>(c2 - a2 - b2);
    if (t.is_lawson()) {
        co.c1_sq = 1.0;
        co.c2_sq = 1.0;
        co.c3_sq = 0.0;
        co.k2 = static_cast<double>(b2 - a2) / static_cast<double>(b2);
        return co;
    }
    // c^2 > a^2 + b^2 keeps every denominator away from zero.
    assert(c2 - a2 > 0 && c2 - b2 > 0);
    co.c1_sq = static_cast<double>(b2 + c2 - a2) / static_cast<double>(2 * (c2 - a2));
    co.c2_sq = static_cast<double>(a2 + c2 - b2) / static_cast<double>(2 * (c2 - b2));
    co.c3_sq = static_cast<double>(c2 - a2 - b2) / static_cast<double>(2 * (c2 - b2));
    co.k2 = static_cast<double>(b2 - a2) / static_cast<double>(c2 - a2);
    return co;
}

Point6 immersion(const Triple& t, const Coefficients& co, double x, double y) {
    const double s = std::sin(y);
    const double f1 = std::sqrt(co.c1_sq) * s;
    const double f2 = std::sqrt(co.c2_sq) * std::cos(y);
    const double f3 = co.c3_sq == 0.0 ? 0.0 : std::sqrt(co.c3_sq) * std::sqrt(1.0 - co.k2 * s * s);
    const double ax = static_cast<double>(t.a) * x;
    const double bx = static_cast<double>(t.b) * x;
    const double cx = t.c_real() * x;
    return {std::sin(ax) * f1, std::cos(ax) * f1, std::sin(bx) * f2,
            std::cos(bx) * f2, std::sin(cx) * f3, std::cos(cx) * f3};
}

Point6 immersion(const Triple& t, double x, double y) { return immersion(t, coefficients(t), x, y); }

Metric metric(const Triple& t, double y) {
    const Coefficients co = coefficients(t);
    const double P = co.P(y);
    return {P, 2.0 * P / (co.Q + 2.0 * P)};
}

std::string to_string(Topology t) { return t == Topology::Torus ? "Torus" : "KleinBottle"; }

std::string to_string(Subcase s) {
    switch (s) {
        case Subcase::Lawson: return "Lawson";
        case Subcase::I: return "I";
        case Subcase::II: return "II";
        case Subcase::III: return "III";
    }
    return "?";
}

std::string to_string(Functional f) { return f == Functional::Torus ? "TorusFunctional" : "KleinFunctional"; }

std::string to_string(Identification phi) {
    switch (phi) {
        case Identification::Phi1: return "Phi1";
        case Identification::Phi2: return "Phi2";
        case Identification::Phi3: return "Phi3";
    }
    return "?";
}

Subcase subcase_of(const Triple& t) {
    if (t.is_lawson()) return Subcase::Lawson;
    if (!is_even(t.c)) return Subcase::III;
    if (is_even(t.a) != is_even(t.b)) return Subcase::I;
    if (!is_even(t.a) && !is_even(t.b)) return Subcase::II;
    return Subcase::III;
}

int covering_degree(Subcase s) { return s == Subcase::III ? 1 : 2; }

namespace {

Topology topology_of(const Triple& t, Subcase s) {
    if (s == Subcase::Lawson) {
        return (!is_even(t.a) && !is_even(t.b)) ? Topology::Torus : Topology::KleinBottle;
    }
    return s == Subcase::I ? Topology::KleinBottle : Topology::Torus;
}

double parameter_area(const Triple& t) {
    if (t.is_lawson()) {
        // 8 pi a E(sqrt(a^2 - b^2) / a) with a >= b.
        const auto hi = static_cast<double>(std::max(t.a, t.b));
        const auto lo = static_cast<double>(std::min(t.a, t.b));
        const auto m = elliptic::Modulus::from_k2((hi * hi - lo * lo) / (hi * hi));
        return 8.0 * kPi * hi * elliptic::complete_E(m);
    }
    const auto ca = static_cast<double>(t.c2() - t.a2());
    const auto Q = static_cast<double>(t.c2() - t.a2() - t.b2());
    const auto m = elliptic::Modulus::from_k2(static_cast<double>(t.b2() - t.a2()) / ca);
    return 4.0 * kPi / std::sqrt(ca) * (2.0 * ca * elliptic::complete_E(m) - Q * elliptic::complete_K(m));
}

}  // namespace

Area area_closed(const Triple& t) {
    const double S = parameter_area(t);
    return {S, S / covering_degree(subcase_of(t))};
}

double area_quadrature(const Triple& t, int n) {
    if (n < 64) {
        throw std::invalid_argument("area_quadrature needs at least 64 nodes");
    }
    const Coefficients co = coefficients(t);
    const double h = 2.0 * kPi / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double P = co.P(i * h);
        sum += P * std::sqrt(2.0 / (co.Q + 2.0 * P));
    }
    return 2.0 * kPi * sum * h / covering_degree(subcase_of(t));
}

ExtremalIndex extremal_index(const Triple& t) {
    const Subcase s = subcase_of(t);
    const Topology topo = topology_of(t, s);
    const Functional functional = topo == Topology::Torus ? Functional::Torus : Functional::KleinBottle;
    const double S = parameter_area(t);
    const auto a = static_cast<int>(t.a);
    const auto b = static_cast<int>(t.b);
    const auto c = static_cast<int>(t.c);

    if (s == Subcase::Lawson) {
        const auto half_c = static_cast<int>(isqrt(t.c2()) / 2);
        return {2 * half_c + a + b - 1, functional, S};
    }
    // T_{a,0,c} in the a <= b orientation has its zero in the a slot.
    const int zeros = (a == 0) + (b == 0);
    const int nonzero = a + b;
    int j = 0;
    switch (s) {
        case Subcase::I:
            j = zeros == 1 ? nonzero + c - 2 : a + b + c - 3;
            break;
        case Subcase::II:
            j = a + b + c - 3;
            break;
        case Subcase::III:
            if (zeros == 2) {
                j = 1;
            } else if (zeros == 1) {
                j = 2 * (nonzero + c) - 2;
            } else {
                j = 2 * (a + b + c) - 3;
            }
            break;
        case Subcase::Lawson:
            break;
    }
    return {j, functional, s == Subcase::III ? 2.0 * S : S};
}

SurfaceClass classify(const Triple& t) {
    const Subcase s = subcase_of(t);
    const Area ar = area_closed(t);
    const ExtremalIndex ex = extremal_index(t);
    return SurfaceClass{topology_of(t, s), s, covering_degree(s), ar.S, ar.area,
                        ex.j, ex.functional, ex.lambda_value};
}

std::array<double, 2> apply(Identification phi, double x, double y) {
    switch (phi) {
        case Identification::Phi1: return {x + kPi, kPi - y};
        case Identification::Phi2: return {x + kPi, -y};
        case Identification::Phi3: return {x + kPi, y + kPi};
    }
    return {x, y};
}

std::optional<Identification> predicted_identification(const Triple& t) {
    const bool c_even = t.is_lawson() || is_even(t.c);
    if (!c_even) return std::nullopt;
    const bool a_even = is_even(t.a);
    const bool b_even = is_even(t.b);
    if (a_even && !b_even) return Identification::Phi1;
    if (!a_even && b_even) return Identification::Phi2;
    if (!a_even && !b_even) return Identification::Phi3;
    return std::nullopt;
}

double symmetry_residual(const Triple& t, Identification phi, int n) {
    if (n < 16) {
        throw std::invalid_argument("symmetry_residual needs n >= 16");
    }
    const Coefficients co = coefficients(t);
    const double h = 2.0 * kPi / n;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = i * h;
            const double y = j * h;
            const auto [x2, y2] = apply(phi, x, y);
            const Point6 p = immersion(t, co, x, y);
            const Point6 q = immersion(t, co, x2, y2);
            double d2 = 0.0;
            for (int k = 0; k < 6; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
            worst = std::max(worst, std::sqrt(d2));
        }
    }
    return worst;
}

double injectivity_scan(const Triple& t, int n) {
    if (covering_degree(subcase_of(t)) != 1) {
        throw std::invalid_argument("quotient surface; scan the quotient domain instead");
    }
    if (n < 32) {
        throw std::invalid_argument("injectivity_scan needs n >= 32");
    }
    const Coefficients co = coefficients(t);
    const double h = 2.0 * kPi / n;
    std::vector<Point6> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) pts.push_back(immersion(t, co, i * h, j * h));
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < pts.size(); ++p) {
        for (std::size_t q = p + 1; q < pts.size(); ++q) {
            double d2 = 0.0;
            for (int k = 0; k < 6; ++k) d2 += (pts[p][k] - pts[q][k]) * (pts[p][k] - pts[q][k]);
            best = std::min(best, d2);
        }
    }
    return std::sqrt(best);
}

double injectivity_floor(const Triple& t, int n) {
    const Coefficients co = coefficients(t);
    const double h = 2.0 * kPi / n;
    double g_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4 * n; ++j) {
        const double P = co.P(j * h / 4.0);
        g_min = std::min({g_min, P, 2.0 * P / (co.Q + 2.0 * P)});
    }
    return 0.5 * h * std::sqrt(g_min);
}

}  // namespace lawson
