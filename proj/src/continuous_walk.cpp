#include "qws/continuous_walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qws {

namespace {

constexpr Complex kImag{0.0, 1.0};

void check_oracle_cap(const ContinuousParams& p, std::size_t cap) {
    if (p.n > cap)
        throw OracleSizeError("full-space walk: n = " + std::to_string(p.n) +
                              " exceeds the oracle cap " + std::to_string(cap));
}

ReducedState2 uniform_reduced(const ContinuousParams& p) {
    const double nn = static_cast<double>(p.n);
    return {Complex{1.0 / std::sqrt(nn), 0.0}, Complex{std::sqrt((nn - 1.0) / nn), 0.0}};
}

std::size_t sample_count(const ContinuousParams& p) {
    // t = 0, dt, ..., up to and including t_max (with rounding slack).
    return static_cast<std::size_t>(std::floor(p.t_max / p.dt + 1e-9)) + 1;
}

}  // namespace

void ContinuousParams::validate() const {
    if (n < 2) throw std::invalid_argument("ContinuousParams: n must be at least 2");
    if (!(gamma_n > 0.0) || !std::isfinite(gamma_n))
        throw std::invalid_argument("ContinuousParams: gamma_n must be positive");
    if (!(epsilon >= 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("ContinuousParams: epsilon must lie in [0, 1)");
    if (marked >= n) throw std::invalid_argument("ContinuousParams: marked vertex out of range");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("ContinuousParams: dt must be positive");
    if (!(t_max >= 0.0) || !std::isfinite(t_max))
        throw std::invalid_argument("ContinuousParams: t_max must be nonnegative");
}

double ReducedState2::norm() const { return std::sqrt(std::norm(amp_a) + std::norm(amp_b)); }

Matrix reduced_hamiltonian(const ContinuousParams& p) {
    p.validate();
    const double nn = static_cast<double>(p.n);
    const double geff = p.effective_gamma();
    Matrix h(2, 2);
    h(0, 0) = -1.0;  // oracle term; untouched by the barrier scaling
    h(0, 1) = -geff * std::sqrt(nn - 1.0);
    h(1, 0) = h(0, 1);
    h(1, 1) = -geff * (nn - 2.0);
    return h;
}

SpectrumC spectrum_c(const ContinuousParams& p) {
    const Matrix h = reduced_hamiltonian(p);
    const auto pairs = hermitian_eigensystem_2(h);

    SpectrumC s;
    s.e0 = pairs[0].value.real();
    s.e1 = pairs[1].value.real();
    s.gap = s.e1 - s.e0;
    s.ground = {pairs[0].vector[0], pairs[0].vector[1]};
    s.excited = {pairs[1].vector[0], pairs[1].vector[1]};

    const double geff_n = p.gamma_n * (1.0 - p.epsilon);
    const double closed = std::sqrt((1.0 - geff_n) * (1.0 - geff_n) + 4.0 * p.effective_gamma());
    if (std::abs(s.gap - closed) > 1e-12)
        throw AnalyticMismatchError("spectrum_c: gap deviates from the closed form");
    return s;
}

double critical_gamma_n(const ContinuousParams& p) {
    p.validate();
    return 1.0 / (1.0 - p.epsilon);
}

double predicted_runtime_c(const ContinuousParams& p) {
    return kPi / spectrum_c(p).gap;
}

double predicted_peak_probability_c(const ContinuousParams& p) {
    const auto modes = spectrum_c(p);
    const ReducedState2 s = uniform_reduced(p);
    const double c0a0 = (modes.ground.amp_a.real() * s.amp_a.real() +
                         modes.ground.amp_b.real() * s.amp_b.real()) *
                        modes.ground.amp_a.real();
    const double c1a1 = (modes.excited.amp_a.real() * s.amp_a.real() +
                         modes.excited.amp_b.real() * s.amp_b.real()) *
                        modes.excited.amp_a.real();
    const double reach = std::abs(c0a0) + std::abs(c1a1);
    return reach * reach;
}

ReducedState2 evolve_reduced_c(const ContinuousParams& p, double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("evolve_reduced_c: t must be nonnegative");
    const Matrix h = reduced_hamiltonian(p);
    const auto pairs = hermitian_eigensystem_2(h);
    const ReducedState2 start = uniform_reduced(p);
    const Vector s{start.amp_a, start.amp_b};

    Vector out(2, Complex{0.0, 0.0});
    for (const auto& pair : pairs) {
        const Complex coeff = inner(pair.vector, s);
        const Complex factor = std::exp(-kImag * pair.value.real() * t);
        for (std::size_t i = 0; i < 2; ++i) out[i] += factor * coeff * pair.vector[i];
    }
    return {out[0], out[1]};
}

ProbabilitySeries success_series_c(const ContinuousParams& p) {
    p.validate();
    const Matrix h = reduced_hamiltonian(p);
    const auto pairs = hermitian_eigensystem_2(h);
    const ReducedState2 start = uniform_reduced(p);
    const Vector s{start.amp_a, start.amp_b};
    const Complex c0 = inner(pairs[0].vector, s);
    const Complex c1 = inner(pairs[1].vector, s);

    ProbabilitySeries series;
    series.abscissa = Abscissa::Time;
    series.params = p;
    const std::size_t count = sample_count(p);
    series.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) * p.dt;
        const Complex amp_a = std::exp(-kImag * pairs[0].value.real() * t) * c0 * pairs[0].vector[0] +
                              std::exp(-kImag * pairs[1].value.real() * t) * c1 * pairs[1].vector[0];
        series.samples.push_back({t, std::norm(amp_a)});
    }
    return series;
}

Vector full_hamiltonian_apply(const ContinuousParams& p, const Vector& state,
                              FullHamiltonianTerms terms, std::size_t oracle_cap) {
    p.validate();
    check_oracle_cap(p, oracle_cap);
    if (state.size() != p.n)
        throw std::invalid_argument("full_hamiltonian_apply: state has wrong dimension");

    const double nn = static_cast<double>(p.n);
    const double gamma = p.gamma();
    const double hop = 1.0 - p.epsilon;
    const double shift = terms.include_identity_shift ? (nn - 1.0) * p.epsilon : 0.0;

    Complex total{0.0, 0.0};
    for (const auto& x : state) total += x;

    Vector out(p.n);
    for (std::size_t v = 0; v < p.n; ++v) {
        // (A' psi)_v = (N-1) eps psi_v + (1 - eps) (sum - psi_v)
        const Complex adj = shift * state[v] + hop * (total - state[v]);
        out[v] = -gamma * adj;
    }
    if (terms.include_oracle) out[p.marked] -= state[p.marked];
    return out;
}

ProbabilitySeries integrate_full_c(const ContinuousParams& p, IntegrateOptions opts) {
    p.validate();
    check_oracle_cap(p, opts.oracle_cap);

    const double nn = static_cast<double>(p.n);
    const double gamma = p.gamma();
    // Max absolute row sum of H: the marked row, with the oracle's 1 on top of
    // the adjacency terms.
    double row_sum = gamma * (nn - 1.0) * (1.0 - p.epsilon);
    if (opts.terms.include_identity_shift) row_sum += gamma * (nn - 1.0) * p.epsilon;
    if (opts.terms.include_oracle) row_sum += 1.0;

    double h_max = opts.max_substep > 0.0 ? opts.max_substep : std::min(0.002, 0.02 / row_sum);

    Vector state(p.n, Complex{1.0 / std::sqrt(nn), 0.0});
    auto deriv = [&](const Vector& psi) {
        Vector hpsi = full_hamiltonian_apply(p, psi, opts.terms, opts.oracle_cap);
        for (auto& x : hpsi) x *= -kImag;
        return hpsi;
    };

    ProbabilitySeries series;
    series.abscissa = Abscissa::Time;
    series.params = p;
    const std::size_t count = sample_count(p);
    series.samples.reserve(count);
    series.samples.push_back({0.0, std::norm(state[p.marked])});
    double worst_drift = 0.0;

    const auto n_sub = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(p.dt / h_max - 1e-12)));
    const double h = p.dt / static_cast<double>(n_sub);
    for (std::size_t k = 1; k < count; ++k) {
        for (std::size_t sub = 0; sub < n_sub; ++sub) {
            const Vector k1 = deriv(state);
            Vector tmp(p.n);
            for (std::size_t i = 0; i < p.n; ++i) tmp[i] = state[i] + 0.5 * h * k1[i];
            const Vector k2 = deriv(tmp);
            for (std::size_t i = 0; i < p.n; ++i) tmp[i] = state[i] + 0.5 * h * k2[i];
            const Vector k3 = deriv(tmp);
            for (std::size_t i = 0; i < p.n; ++i) tmp[i] = state[i] + h * k3[i];
            const Vector k4 = deriv(tmp);
            for (std::size_t i = 0; i < p.n; ++i)
                state[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        const double drift = std::abs(norm2(state) - 1.0);
        worst_drift = std::max(worst_drift, drift);
        if (drift > 1e-6)
            throw IntegrationAccuracyError("integrate_full_c: norm drift " +
                                           std::to_string(drift) + " exceeds 1e-6");
        series.samples.push_back({static_cast<double>(k) * p.dt, std::norm(state[p.marked])});
    }
    if (opts.max_norm_drift_out) *opts.max_norm_drift_out = worst_drift;
    return series;
}

}  // namespace qws
