#pragma once

// Symmetric pencil (A, W) from a conservative three-point discretization:
//
//   x^T A x = sum_i c_i (x_{i+1} - x_i)^2 + c_wrap (x_0 - s x_{n-1})^2 + sum_i v_i x_i^2,
//   x^T W x = sum_i w_i x_i^2,
//
// with s = +1 for a periodic and s = -1 for an antiperiodic wraparound. A is
// tridiagonal plus the wraparound corner; W is diagonal and positive.
//
// Eigenvalues: the unknowns are interleaved from both ends (0, n-1, 1, n-2,
// ...) so the corner lands inside a bandwidth-2 band, LAPACK's dsbevx gives
// the lowest ones, and each is then polished by inverse iteration plus a
// Rayleigh quotient evaluated in the difference form above. The polished value
// carries rounding error of order eps/h rather than eps*||A|| ~ eps/h^2.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lawson {

class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, int grid_n) : std::runtime_error(what), grid_n_(grid_n) {}
    int grid_n() const { return grid_n_; }

private:
    int grid_n_;
};

struct JacobiPencil {
    std::vector<double> conductance;  // c_i between unknowns i and i+1, size n-1
    double wrap_conductance = 0.0;    // between unknown n-1 and unknown 0
    double wrap_sign = 1.0;           // +1 periodic, -1 antiperiodic
    std::vector<double> potential;    // v_i
    std::vector<double> weight;       // w_i > 0

    std::size_t size() const { return weight.size(); }

    double diag(std::size_t i) const;
    double off(std::size_t i) const { return -conductance[i]; }
    /// A_{0,n-1}
    double corner() const { return -wrap_sign * wrap_conductance; }

    double energy(const std::vector<double>& x) const;
    double mass(const std::vector<double>& x) const;

    /// The lowest `m` eigenvalues, ascending. Throws NumericError (carrying
    /// `grid_n`) on invalid entries or if the eigensolver fails.
    std::vector<double> lowest(std::size_t m, int grid_n = 0) const;
};

}  // namespace lawson
