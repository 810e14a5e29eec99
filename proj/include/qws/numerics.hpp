// numerics.hpp
// Small dense complex linear algebra shared by the walk modules: matrix/vector
// arithmetic, closed-form eigensystems at sizes 2 and 3, and fractional powers
// of unitaries applied through an eigenbasis.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qws {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// A closed-form quantity failed to reproduce an independently computed value.
// Signals a transcription bug in an analytic formula, not bad user input.
struct AnalyticMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A brute-force path was asked to handle a problem size above its cap.
struct OracleSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The integrator's norm-drift monitor tripped.
struct IntegrationAccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix. Only small fixed sizes are used in practice.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

using Vector = std::vector<Complex>;

// Eigenvalue with unit-norm eigenvector; residual = ||M v - value v||_2
// measured when the pair was produced.
struct EigenPair {
    Complex value{};
    Vector vector;
    double residual = 0.0;
};

// Unnormalized eigenvector candidate with its claimed eigenvalue.
struct EigenHint {
    Complex value{};
    Vector vector;
};

Vector mat_vec(const Matrix& m, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);

// <a|b>: conjugate-linear in the first argument.
Complex inner(const Vector& a, const Vector& b);
double norm2(const Vector& v);
Vector scaled(const Vector& v, Complex factor);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);

// True iff the max-entry deviation of M^dagger M from the identity is <= tol.
bool is_unitary(const Matrix& m, double tol);
double unitarity_deviation(const Matrix& m);

// Closed-form eigensystem of a 2x2 Hermitian matrix (checked within 1e-12).
// Eigenvalues ascending, eigenvectors exactly orthonormal.
std::array<EigenPair, 2> hermitian_eigensystem_2(const Matrix& m);

// Eigensystem of a 3x3 unitary (checked within 1e-10). With a hint the hint
// vectors are verified and orthonormalized instead of solving from scratch;
// a hint residual above 1e-8 raises AnalyticMismatchError.
std::array<EigenPair, 3> unitary_eigensystem_3(
    const Matrix& m,
    const std::optional<std::array<EigenHint, 3>>& hint = std::nullopt);

// Applies value^exponent through the eigenbasis, using the principal branch
// of the phase: value = e^{i theta} with theta in (-pi, pi], result e^{i p theta}.
Vector unitary_fractional_power_apply(const std::array<EigenPair, 3>& pairs,
                                      double exponent, const Vector& v);

}  // namespace qws
