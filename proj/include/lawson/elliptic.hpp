#pragma once

// Complete elliptic integrals of the first and second kind,
//
//   K(k) = int_0^1 da / (sqrt(1 - a^2) sqrt(1 - k^2 a^2)),
//   E(k) = int_0^1 sqrt(1 - k^2 a^2) / sqrt(1 - a^2) da,
//
// evaluated by the arithmetic-geometric mean. The parameter is carried as k^2
// so that negative values (the real continuation reached by the surface family
// when a > b) stay representable.

namespace lawson::elliptic {

class Modulus {
public:
    /// Modulus from k itself; k^2 = k*k.
    static Modulus from_k(double k);
    /// Modulus from k^2, which may be negative. Requires k2 <= 1.
    static Modulus from_k2(double k2);

    /// k for k2 >= 0; for k2 < 0 this is sqrt(|k2|) (the imaginary part).
    double k() const { return k_; }
    double k2() const { return k2_; }
    /// (k')^2 = 1 - k^2, computed without cancellation when built from k.
    double complement2() const { return kc2_; }

private:
    Modulus(double k, double k2, double kc2) : k_(k), k2_(k2), kc2_(kc2) {}
    double k_;
    double k2_;
    double kc2_;
};

/// Common limit of the arithmetic-geometric mean iteration. Throws
/// std::domain_error unless x > 0 and y > 0.
double agm(double x, double y);

/// K(k). Throws std::domain_error for k2 >= 1.
double complete_K(const Modulus& m);

/// E(k). Throws std::domain_error for k2 > 1; E(1) = 1.
double complete_E(const Modulus& m);

inline double complete_K(double k) { return complete_K(Modulus::from_k(k)); }
inline double complete_E(double k) { return complete_E(Modulus::from_k(k)); }

/// E(2 sqrt(k) / (1 + k)) - (2 E(k) - (1 - k^2) K(k)) / (1 + k).
/// Zero up to rounding (Landen's transformation). Requires 0 <= k < 1.
double landen_gap(double k);

}  // namespace lawson::elliptic
