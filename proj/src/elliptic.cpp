#include "lawson/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lawson::elliptic {

namespace {

constexpr int kMaxAgmIterations = 40;
constexpr double kAgmTolerance = 1e-15;

struct AgmResult {
    double mean;
    double companion_sum;  // sum_{n>=1} 2^{n-1} c_n^2
};

// Runs the AGM on (1, k') and accumulates the companion sum used for E.
AgmResult agm_with_companion(double kc) {
    double a = 1.0;
    double b = kc;
    double sum = 0.0;
    double weight = 0.5;
    for (int i = 0; i < kMaxAgmIterations; ++i) {
        const double c = 0.5 * (a - b);
        weight *= 2.0;
        sum += weight * c * c;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        if (std::abs(a - b) <= kAgmTolerance * a) {
            return {a, sum};
        }
    }
    return {a, sum};
}

}  // namespace

Modulus Modulus::from_k(double k) {
    if (!std::isfinite(k) || std::abs(k) > 1.0) {
        throw std::domain_error("elliptic modulus |k| must not exceed 1, got " + std::to_string(k));
    }
    return Modulus(std::abs(k), k * k, (1.0 - k) * (1.0 + k));
}

Modulus Modulus::from_k2(double k2) {
    if (!std::isfinite(k2) || k2 > 1.0) {
        throw std::domain_error("elliptic parameter k^2 must not exceed 1, got " + std::to_string(k2));
    }
    return Modulus(std::sqrt(std::abs(k2)), k2, 1.0 - k2);
}

double agm(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::domain_error("agm requires positive arguments");
    }
    for (int i = 0; i < kMaxAgmIterations; ++i) {
        const double a = 0.5 * (x + y);
        const double g = std::sqrt(x * y);
        x = a;
        y = g;
        if (std::abs(x - y) <= kAgmTolerance * x) {
            break;
        }
    }
    return 0.5 * (x + y);
}

double complete_K(const Modulus& m) {
    if (!(m.k2() < 1.0) || !(m.complement2() > 0.0)) {
        throw std::domain_error("K(k) diverges for k^2 >= 1");
    }
    return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(m.complement2())));
}

double complete_E(const Modulus& m) {
    if (m.k2() > 1.0) {
        throw std::domain_error("E(k) requires k^2 <= 1");
    }
    if (m.complement2() <= 0.0) {
        return 1.0;
    }
    const AgmResult r = agm_with_companion(std::sqrt(m.complement2()));
    const double K = std::numbers::pi / (2.0 * r.mean);
    // c_0^2 = k^2 enters with weight 1/2; it is negative for imaginary moduli.
    return K * (1.0 - 0.5 * m.k2() - r.companion_sum);
}

double landen_gap(double k) {
    if (!(k >= 0.0) || !(k < 1.0)) {
        throw std::domain_error("landen_gap requires 0 <= k < 1");
    }
    const Modulus m = Modulus::from_k(k);
    const double lhs = complete_E(2.0 * std::sqrt(k) / (1.0 + k));
    const double rhs = (2.0 * complete_E(m) - m.complement2() * complete_K(m)) / (1.0 + k);
    return lhs - rhs;
}

}  // namespace lawson::elliptic
