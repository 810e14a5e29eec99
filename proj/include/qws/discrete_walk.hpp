// discrete_walk.hpp
// Coined quantum walk search on the complete graph with a faulty shift.
//
// The search step is U = (cos(phi) S + i sin(phi) I) (I (x) C0) (R_a (x) I):
// oracle phase flip on the marked vertex, Grover diffusion over the coin,
// then the flip-flop shift attenuated by the barrier angle phi. Symmetry
// confines the dynamics to the 3D subspace spanned by
//   |ab> : marked vertex, pointing at unmarked vertices,
//   |ba> : unmarked vertices pointing at the marked one,
//   |bb> : unmarked vertices pointing at unmarked vertices,
// and everything analytic here lives in that basis. A full-Hilbert-space
// brute-force path double-checks the reduction for small N.

#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "qws/numerics.hpp"
#include "qws/params.hpp"
#include "qws/series.hpp"

namespace qws {

// Amplitudes in the {|ab>, |ba>, |bb>} basis.
struct ReducedState3 {
    Complex amp_ab{};
    Complex amp_ba{};
    Complex amp_bb{};

    double norm() const;
    Vector to_vector() const { return {amp_ab, amp_ba, amp_bb}; }
    static ReducedState3 from_vector(const Vector& v);
};

// Analytic eigensystem of the reduced search step. The conjugate pair
// e^{+-i sigma} drives the rotation from the uniform state onto the marked
// vertex; the remaining mode (eigenvalue -e^{i phi}) never mixes with it.
struct SpectrumD {
    std::size_t n = 0;
    double phi = 0.0;

    double cos_theta = 0.0, sin_theta = 0.0, theta = 0.0;  // coin mixing angle
    double cos_sigma = 0.0, sin_sigma = 0.0, sigma = 0.0;  // rotation rate per step

    EigenPair spectator;  // eigenvalue -e^{i phi}
    EigenPair rot_plus;   // eigenvalue e^{+i sigma}
    EigenPair rot_minus;  // eigenvalue e^{-i sigma}

    std::array<EigenPair, 3> basis() const { return {spectator, rot_plus, rot_minus}; }
};

// The search step as an explicit 3x3 matrix in the reduced basis.
Matrix reduced_operator(const DiscreteParams& p);

// Uniform superposition in the reduced basis: (1, 1, sqrt(N-2)) / sqrt(N).
ReducedState3 initial_reduced(const DiscreteParams& p);

// Closed-form eigensystem, residual-checked against reduced_operator.
SpectrumD spectrum(const DiscreteParams& p);

// Unnormalized sum and difference of the rotating pair; third components are
// exactly 2 and 0. Used for regime analysis.
std::pair<Vector, Vector> sum_diff_vectors(const SpectrumD& s);

// Steps to the first success-probability peak: pi / (2 sigma).
double predicted_runtime(const DiscreteParams& p);

// Large-N peak success probability 1 / (c^2 + 2) with c = phi sqrt(N).
double predicted_peak_probability(const DiscreteParams& p);

// Iterates the 3x3 step from the uniform state; probability at step t is
// |amp_ab(t)|^2 (position-only measurement). Series has steps+1 samples.
ProbabilitySeries simulate_reduced(const DiscreteParams& p, std::size_t steps);

inline constexpr std::size_t kDiscreteOracleCap = 64;

// Full coined space C^N (x) C^(N-1). Basis states are ordered pairs (v, w)
// with w != v, lexicographic by (v, w).
struct FullCoinedState {
    std::size_t n = 0;
    Vector amplitudes;

    static FullCoinedState uniform(std::size_t n);

    std::size_t dim() const { return n * (n - 1); }
    std::size_t index(std::size_t v, std::size_t w) const {
        return v * (n - 1) + (w < v ? w : w - 1);
    }
    double vertex_probability(std::size_t v) const;
    double norm() const;
};

// The three stages of one search step, applied in place and matrix-free.
void apply_oracle(const DiscreteParams& p, FullCoinedState& s);        // R_a (x) I
void apply_coin(const DiscreteParams& p, FullCoinedState& s);          // I (x) C0
void apply_faulty_shift(const DiscreteParams& p, FullCoinedState& s);  // alpha S + beta I

// One full search step. Brute-force reference path; never materializes the
// N(N-1) x N(N-1) matrix. Rejects n above oracle_cap.
FullCoinedState full_operator_apply(const DiscreteParams& p, const FullCoinedState& s,
                                    std::size_t oracle_cap = kDiscreteOracleCap);

// Position-marginal success probability series from the uniform state.
ProbabilitySeries simulate_full(const DiscreteParams& p, std::size_t steps,
                                std::size_t oracle_cap = kDiscreteOracleCap);

}  // namespace qws
