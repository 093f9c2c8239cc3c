#pragma once

// The family T_{a,b,c} of minimal tori and Klein bottles in S^5:
//
//   F(x, y) = (sin ax f1, cos ax f1, sin bx f2, cos bx f2, sin cx f3, cos cx f3),
//   f1 = c1 sin y,  f2 = c2 cos y,  f3 = c3 sqrt(1 - k^2 sin^2 y),
//
// with c^2 > a^2 + b^2 (generalized case) or c^2 = a^2 + b^2 (Lawson tau-surfaces).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lawson {

enum class Family { Generalized, Lawson };

/// Integer parameters of a surface in the family. For Lawson surfaces c is not
/// an integer; `c` is left at 0 and only c^2 = a^2 + b^2 is meaningful.
struct Triple {
    Family family = Family::Generalized;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t a2() const { return a * a; }
    std::int64_t b2() const { return b * b; }
    std::int64_t c2() const { return family == Family::Lawson ? a * a + b * b : c * c; }
    /// c as a real number (sqrt(a^2 + b^2) for Lawson surfaces).
    double c_real() const;
    bool is_lawson() const { return family == Family::Lawson; }
    bool is_canonical() const;

    friend bool operator==(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

/// Largest accepted |a|, |b|, |c|. Keeps c^2 and the index j exact in
/// integer and double arithmetic.
inline constexpr std::int64_t kMaxEntry = 1'000'000;

class InvalidTriple : public std::invalid_argument {
public:
    enum class Reason { NotInFamily, Degenerate, OutOfRange };
    InvalidTriple(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// Validates and canonicalizes. Throws InvalidTriple when the parameters do
/// not describe a surface of the family. `c` is ignored for Lawson input.
Triple validate(Family family, std::int64_t a, std::int64_t b, std::int64_t c = 0);

/// Like validate (absolute values, gcd reduction) but keeps the given a/b order.
/// The resulting surface is isometric to the canonical one.
Triple validate_oriented(Family family, std::int64_t a, std::int64_t b, std::int64_t c = 0);

/// Absolute values, gcd over nonzero entries, then a <= b (generalized) or
/// a >= b (Lawson). Idempotent.
Triple canonicalize(Triple t);

/// Squared amplitudes and Lame modulus of the immersion, plus the metric data
/// P(y) = (c^2 + (b^2 - a^2) cos 2y) / 2 and Q = c^2 - a^2 - b^2.
struct Coefficients {
    double c1_sq = 0.0;
    double c2_sq = 0.0;
    double c3_sq = 0.0;
    double k2 = 0.0;
    double Q = 0.0;
    std::int64_t a2 = 0;
    std::int64_t b2 = 0;
    std::int64_t c2 = 0;

    double P(double y) const;
    double dP(double y) const;
};

Coefficients coefficients(const Triple& t);

using Point6 = std::array<double, 6>;

Point6 immersion(const Triple& t, double x, double y);
/// Same map with precomputed coefficients, for grid sweeps.
Point6 immersion(const Triple& t, const Coefficients& co, double x, double y);

struct Metric {
    double g_xx;
    double g_yy;
};

/// Induced metric g = P dx^2 + 2P / (Q + 2P) dy^2.
Metric metric(const Triple& t, double y);

enum class Topology { Torus, KleinBottle };
enum class Subcase { Lawson, I, II, III };
enum class Functional { Torus, KleinBottle };

std::string to_string(Topology);
std::string to_string(Subcase);
std::string to_string(Functional);

struct Area {
    double S;     // area of the 2pi x 2pi parameter torus
    double area;  // area of the surface itself, S / covering degree
};

/// Closed form through complete elliptic integrals.
Area area_closed(const Triple& t);

/// Trapezoidal oracle for the area on `n` nodes in y (n >= 64).
double area_quadrature(const Triple& t, int n);

Subcase subcase_of(const Triple& t);
int covering_degree(Subcase s);

struct ExtremalIndex {
    int j;
    Functional functional;
    double lambda_value;
};

ExtremalIndex extremal_index(const Triple& t);

struct SurfaceClass {
    Topology topology;
    Subcase subcase;
    int covering_degree;
    double S;
    double area;
    int j;
    Functional functional;
    double lambda_value;
};

SurfaceClass classify(const Triple& t);

/// Parameter-plane maps (x, y) -> (x + pi, ...) that can identify points of F.
enum class Identification { Phi1, Phi2, Phi3 };

std::string to_string(Identification);
std::array<double, 2> apply(Identification phi, double x, double y);

/// The identification the parity rules predict, or nullopt for one-to-one surfaces.
std::optional<Identification> predicted_identification(const Triple& t);

/// max over an n x n grid of |F(phi(x, y)) - F(x, y)|.
double symmetry_residual(const Triple& t, Identification phi, int n);

/// Minimum distance between images of distinct nodes of an n x n grid on
/// [0, 2pi)^2. Only meaningful for one-to-one (subcase III) surfaces; throws
/// std::invalid_argument otherwise.
double injectivity_scan(const Triple& t, int n);

/// Lower bound expected of injectivity_scan on an embedded surface: half the
/// shortest metric length of a grid edge.
double injectivity_floor(const Triple& t, int n);

}  // namespace lawson
