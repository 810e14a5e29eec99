// continuous_walk.hpp
// Continuous-time quantum walk search on the complete graph with barrier-
// attenuated hopping.
//
// The walk Hamiltonian is H = -gamma A' - |a><a| where A' is the adjacency
// matrix with every off-diagonal entry scaled by (1 - epsilon) and a
// (N-1) epsilon diagonal added. The diagonal is a multiple of the identity,
// so dropping it only changes a global phase; the reduced 2D treatment drops
// it and absorbs the scaling into gamma' = gamma (1 - epsilon). Symmetry
// confines the dynamics to span{|a>, |b>} with |b> the uniform state over
// unmarked vertices. The full N-dimensional path keeps the diagonal and
// integrates numerically as an independent check.

#pragma once

#include <cstddef>

#include "qws/numerics.hpp"
#include "qws/params.hpp"
#include "qws/series.hpp"

namespace qws {

// Amplitudes in the {|a>, |b>} basis.
struct ReducedState2 {
    Complex amp_a{};
    Complex amp_b{};

    double norm() const;
};

// Eigensystem of the reduced 2x2 Hamiltonian.
struct SpectrumC {
    double e0 = 0.0;  // ground energy
    double e1 = 0.0;  // excited energy
    double gap = 0.0;  // e1 - e0, cross-checked against the closed form
    ReducedState2 ground;
    ReducedState2 excited;
};

// H in the 2D subspace: -gamma' [[1/gamma', sqrt(N-1)], [sqrt(N-1), N-2]]
// with gamma' = gamma (1 - epsilon). Real symmetric; identity shift dropped.
Matrix reduced_hamiltonian(const ContinuousParams& p);

// Exact 2x2 eigensystem; the gap must match
// sqrt((1 - gamma' N)^2 + 4 gamma') within 1e-12.
SpectrumC spectrum_c(const ContinuousParams& p);

// The gamma N at which the gap is minimized: 1 / (1 - epsilon).
double critical_gamma_n(const ContinuousParams& p);

// Time of the first success peak under the exact two-level dynamics: pi / gap.
double predicted_runtime_c(const ContinuousParams& p);

// Reachable success maximum of the two-level dynamics: expanding the uniform
// state in the eigenbasis, |amp_a(t)|^2 peaks at (|c0 a0| + |c1 a1|)^2.
double predicted_peak_probability_c(const ContinuousParams& p);

// e^{-iHt} applied to the uniform state (1, sqrt(N-1)) / sqrt(N), computed
// through the 2D eigendecomposition (never numerically integrated).
ReducedState2 evolve_reduced_c(const ContinuousParams& p, double t);

// |amp_a(t)|^2 sampled at t = 0, dt, 2 dt, ..., t_max.
ProbabilitySeries success_series_c(const ContinuousParams& p);

inline constexpr std::size_t kContinuousOracleCap = 256;

// Which terms of the full Hamiltonian to keep. The identity shift is kept by
// default so the check that it only contributes a global phase is a real one.
struct FullHamiltonianTerms {
    bool include_oracle = true;
    bool include_identity_shift = true;
};

// Matrix-free H |state> over the full vertex space. Rejects n above oracle_cap.
Vector full_hamiltonian_apply(const ContinuousParams& p, const Vector& state,
                              FullHamiltonianTerms terms = {},
                              std::size_t oracle_cap = kContinuousOracleCap);

struct IntegrateOptions {
    std::size_t oracle_cap = kContinuousOracleCap;
    // Upper bound on the RK4 substep; 0 picks the default
    // min(0.002, 0.02 / max-row-sum of H).
    double max_substep = 0.0;
    FullHamiltonianTerms terms{};
    // When set, receives the largest |norm - 1| seen during the run.
    double* max_norm_drift_out = nullptr;
};

// Fixed-step RK4 on i d|psi>/dt = H |psi> from the uniform state, sampled on
// the same grid as success_series_c. The state is never renormalized; norm
// drift is the accuracy monitor and drift beyond 1e-6 raises
// IntegrationAccuracyError.
ProbabilitySeries integrate_full_c(const ContinuousParams& p, IntegrateOptions opts = {});

}  // namespace qws
