#include "qws/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace qws {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Principal phase in (-pi, pi]. atan2 can return -pi for (-x, -0.0); fold it.
double principal_arg(Complex z) {
    double theta = std::atan2(z.imag(), z.real());
    if (theta <= -kPi) theta = kPi;
    return theta;
}

Vector residual_vector(const Matrix& m, Complex value, const Vector& v) {
    Vector r = mat_vec(m, v);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= value * v[i];
    return r;
}

// Bilinear cross product (no conjugation): the result annihilates both inputs
// under the unconjugated dot product, so it solves (M - lambda I) v = 0 when
// fed two rows of M - lambda I.
Vector cross3(const Vector& a, const Vector& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// Roots of lambda^3 - c2 lambda^2 + c1 lambda - c0 via Cardano on the
// depressed cubic, then a couple of Newton steps on the original polynomial.
std::array<Complex, 3> cubic_roots(Complex c2, Complex c1, Complex c0) {
    const Complex p = c1 - c2 * c2 / 3.0;
    const Complex q = -2.0 * c2 * c2 * c2 / 27.0 + c1 * c2 / 3.0 - c0;

    std::array<Complex, 3> roots;
    if (std::abs(p) < 1e-30 && std::abs(q) < 1e-30) {
        roots.fill(c2 / 3.0);
    } else {
        const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        // Pick the sqrt branch that avoids cancellation in -q/2 +- disc.
        Complex w = -q / 2.0 + disc;
        if (std::abs(-q / 2.0 - disc) > std::abs(w)) w = -q / 2.0 - disc;
        const Complex u = std::pow(w, 1.0 / 3.0);
        const Complex v = (std::abs(u) > 1e-30) ? -p / (3.0 * u) : Complex{0.0, 0.0};
        const Complex omega{-0.5, std::sqrt(3.0) / 2.0};
        const Complex omega2 = std::conj(omega);
        roots = {u + v + c2 / 3.0,
                 omega * u + omega2 * v + c2 / 3.0,
                 omega2 * u + omega * v + c2 / 3.0};
    }

    auto poly = [&](Complex x) { return ((x - c2) * x + c1) * x - c0; };
    auto dpoly = [&](Complex x) { return (3.0 * x - 2.0 * c2) * x + c1; };
    for (auto& r : roots) {
        for (int it = 0; it < 3; ++it) {
            const Complex d = dpoly(r);
            if (std::abs(d) < 1e-14) break;
            r -= poly(r) / d;
        }
    }
    return roots;
}

Vector normalized(Vector v) {
    const double n = norm2(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
    for (auto& x : v) x /= n;
    return v;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    require(m.cols() == v.size(), "mat_vec: dimension mismatch");
    Vector out(m.rows(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "mat_mul: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex av = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += av * b(k, c);
        }
    return out;
}

Complex inner(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "inner: dimension mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm2(const Vector& v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

Vector scaled(const Vector& v, Complex factor) {
    Vector out = v;
    for (auto& x : out) x *= factor;
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "add: dimension mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "sub: dimension mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

double unitarity_deviation(const Matrix& m) {
    require(m.rows() == m.cols(), "unitarity_deviation: matrix must be square");
    const std::size_t n = m.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(m(k, i)) * m(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

bool is_unitary(const Matrix& m, double tol) {
    return unitarity_deviation(m) <= tol;
}

std::array<EigenPair, 2> hermitian_eigensystem_2(const Matrix& m) {
    require(m.rows() == 2 && m.cols() == 2, "hermitian_eigensystem_2: matrix must be 2x2");
    const double herm_dev =
        std::max({std::abs(m(0, 0).imag()), std::abs(m(1, 1).imag()),
                  std::abs(m(0, 1) - std::conj(m(1, 0)))});
    require(herm_dev <= 1e-12, "hermitian_eigensystem_2: matrix is not Hermitian");

    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = m(0, 1);
    const double half_diff = (a - d) / 2.0;
    const double radius = std::hypot(half_diff, std::abs(b));
    const double mean = (a + d) / 2.0;
    const double lo = mean - radius;
    const double hi = mean + radius;

    std::array<EigenPair, 2> out;
    if (radius <= 0.0 || std::abs(b) == 0.0) {
        // Diagonal: standard basis, ascending.
        const bool swap = a > d;
        out[0] = {Complex{swap ? d : a, 0.0}, swap ? Vector{0.0, 1.0} : Vector{1.0, 0.0}, 0.0};
        out[1] = {Complex{swap ? a : d, 0.0}, swap ? Vector{1.0, 0.0} : Vector{0.0, 1.0}, 0.0};
    } else {
        // Best-conditioned null-space direction across both eigenvalues, then
        // the second eigenvector as the exact orthogonal complement.
        Vector best;
        double best_norm = -1.0;
        int best_index = 0;
        for (int which = 0; which < 2; ++which) {
            const double lambda = which == 0 ? lo : hi;
            const Vector cand1{b, Complex{lambda - a, 0.0}};
            const Vector cand2{Complex{lambda - d, 0.0}, std::conj(b)};
            for (const auto& cand : {cand1, cand2}) {
                const double n = norm2(cand);
                if (n > best_norm) {
                    best_norm = n;
                    best = cand;
                    best_index = which;
                }
            }
        }
        best = normalized(std::move(best));
        const Vector perp{-std::conj(best[1]), std::conj(best[0])};
        const double lam_best = best_index == 0 ? lo : hi;
        const double lam_other = best_index == 0 ? hi : lo;
        EigenPair pb{Complex{lam_best, 0.0}, best, 0.0};
        EigenPair po{Complex{lam_other, 0.0}, perp, 0.0};
        out[0] = best_index == 0 ? pb : po;
        out[1] = best_index == 0 ? po : pb;
    }

    for (auto& pair : out) pair.residual = norm2(residual_vector(m, pair.value, pair.vector));
    return out;
}

std::array<EigenPair, 3> unitary_eigensystem_3(
    const Matrix& m, const std::optional<std::array<EigenHint, 3>>& hint) {
    require(m.rows() == 3 && m.cols() == 3, "unitary_eigensystem_3: matrix must be 3x3");
    require(is_unitary(m, 1e-10), "unitary_eigensystem_3: matrix is not unitary");

    std::array<EigenPair, 3> out;

    if (hint) {
        // Modified Gram-Schmidt on the hint vectors, keeping the hint order.
        std::array<Vector, 3> basis;
        for (std::size_t k = 0; k < 3; ++k) {
            require((*hint)[k].vector.size() == 3, "unitary_eigensystem_3: hint vector must have dim 3");
            Vector v = (*hint)[k].vector;
            for (std::size_t j = 0; j < k; ++j) {
                const Complex proj = inner(basis[j], v);
                for (std::size_t i = 0; i < 3; ++i) v[i] -= proj * basis[j][i];
            }
            const double n = norm2(v);
            require(n > 1e-12 * norm2((*hint)[k].vector) && n > 0.0,
                    "unitary_eigensystem_3: hint vectors are nearly dependent");
            for (auto& x : v) x /= n;
            basis[k] = std::move(v);
        }
        for (std::size_t k = 0; k < 3; ++k) {
            const Complex lambda = (*hint)[k].value;
            const double res = norm2(residual_vector(m, lambda, basis[k]));
            if (res > 1e-8)
                throw AnalyticMismatchError(
                    "unitary_eigensystem_3: hint eigenvector residual exceeds 1e-8");
            out[k] = {lambda, basis[k], res};
        }
        return out;
    }

    const Complex c2 = m(0, 0) + m(1, 1) + m(2, 2);
    const Complex c1 = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
                       (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                       (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    const Complex c0 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    auto roots = cubic_roots(c2, c1, c0);
    std::sort(roots.begin(), roots.end(),
              [](Complex a, Complex b) { return principal_arg(a) < principal_arg(b); });

    auto null_direction = [&](Complex lambda) {
        std::array<Vector, 3> rows;
        for (std::size_t r = 0; r < 3; ++r) {
            rows[r] = {m(r, 0), m(r, 1), m(r, 2)};
            rows[r][r] -= lambda;
        }
        Vector best;
        double best_norm = -1.0;
        for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            Vector cand = cross3(rows[i], rows[j]);
            const double n = norm2(cand);
            if (n > best_norm) {
                best_norm = n;
                best = std::move(cand);
            }
        }
        require(best_norm > 0.0, "unitary_eigensystem_3: null-space extraction failed");
        return normalized(std::move(best));
    };

    // Multiplicity structure. The cross-product null-space construction is
    // ill-conditioned near a degeneracy, so degenerate eigenspaces are taken
    // as orthogonal complements instead (exact for a normal matrix).
    constexpr double kDegenerate = 1e-8;
    const double sep01 = std::abs(roots[0] - roots[1]);
    const double sep12 = std::abs(roots[1] - roots[2]);
    const double sep02 = std::abs(roots[0] - roots[2]);

    std::array<Complex, 3> values = roots;
    std::array<Vector, 3> vectors;
    if (sep01 >= kDegenerate && sep12 >= kDegenerate && sep02 >= kDegenerate) {
        for (std::size_t k = 0; k < 3; ++k) vectors[k] = null_direction(roots[k]);
    } else if (sep01 < kDegenerate && sep12 < kDegenerate && sep02 < kDegenerate) {
        // Scalar matrix: any orthonormal basis works.
        const Complex lambda = c2 / 3.0;
        values = {lambda, lambda, lambda};
        vectors = {Vector{1.0, 0.0, 0.0}, Vector{0.0, 1.0, 0.0}, Vector{0.0, 0.0, 1.0}};
    } else {
        // One isolated root, one degenerate pair.
        std::size_t lone = sep01 < kDegenerate ? 2 : (sep12 < kDegenerate ? 0 : 1);
        const Complex lam_lone = roots[lone];
        const Complex lam_pair = (roots[(lone + 1) % 3] + roots[(lone + 2) % 3]) / 2.0;
        const Vector v_lone = null_direction(lam_lone);

        // Orthonormal basis of the complement of v_lone.
        std::size_t smallest = 0;
        for (std::size_t k = 1; k < 3; ++k)
            if (std::abs(v_lone[k]) < std::abs(v_lone[smallest])) smallest = k;
        Vector u1(3, Complex{0.0, 0.0});
        u1[smallest] = 1.0;
        const Complex proj = inner(v_lone, u1);
        for (std::size_t k = 0; k < 3; ++k) u1[k] -= proj * v_lone[k];
        u1 = normalized(std::move(u1));
        Vector u2 = cross3({std::conj(v_lone[0]), std::conj(v_lone[1]), std::conj(v_lone[2])},
                           {std::conj(u1[0]), std::conj(u1[1]), std::conj(u1[2])});
        u2 = normalized(std::move(u2));

        values = {lam_lone, lam_pair, lam_pair};
        vectors = {v_lone, u1, u2};
    }

    for (std::size_t k = 0; k < 3; ++k) {
        const double res = norm2(residual_vector(m, values[k], vectors[k]));
        if (res > 1e-10)
            throw AnalyticMismatchError("unitary_eigensystem_3: eigenpair residual exceeds 1e-10");
        out[k] = {values[k], std::move(vectors[k]), res};
    }
    return out;
}

Vector unitary_fractional_power_apply(const std::array<EigenPair, 3>& pairs,
                                      double exponent, const Vector& v) {
    require(v.size() == 3, "unitary_fractional_power_apply: vector must have dim 3");
    for (const auto& p : pairs)
        require(p.vector.size() == 3, "unitary_fractional_power_apply: basis vectors must have dim 3");

    double ortho_dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Complex g = inner(pairs[i].vector, pairs[j].vector);
            if (i == j) g -= 1.0;
            ortho_dev = std::max(ortho_dev, std::abs(g));
        }
    require(ortho_dev <= 1e-10, "unitary_fractional_power_apply: basis is not orthonormal");

    Vector out(3, Complex{0.0, 0.0});
    for (const auto& p : pairs) {
        const Complex coeff = inner(p.vector, v);
        // Pure phase: the modulus of a unitary eigenvalue is 1 up to rounding,
        // and carrying it to large exponents would only accumulate that noise.
        const double theta = principal_arg(p.value);
        const Complex factor = std::polar(1.0, exponent * theta);
        for (std::size_t i = 0; i < 3; ++i) out[i] += factor * coeff * p.vector[i];
    }
    return out;
}

}  // namespace qws
