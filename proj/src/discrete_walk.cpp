#include "qws/discrete_walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qws {

namespace {

constexpr Complex kImag{0.0, 1.0};

struct CoinAngles {
    double cos_theta;
    double sin_theta;
};

// cos(theta) = (N-3)/(N-1), sin(theta) = 2 sqrt(N-2)/(N-1).
CoinAngles coin_angles(const DiscreteParams& p) {
    const double nn = static_cast<double>(p.n);
    return {(nn - 3.0) / (nn - 1.0), 2.0 * std::sqrt(nn - 2.0) / (nn - 1.0)};
}

void check_oracle_cap(const DiscreteParams& p, std::size_t cap) {
    if (p.n > cap)
        throw OracleSizeError("full-space walk: n = " + std::to_string(p.n) +
                              " exceeds the oracle cap " + std::to_string(cap));
}

}  // namespace

void DiscreteParams::validate() const {
    if (n < 3) throw std::invalid_argument("DiscreteParams: n must be at least 3");
    if (!(phi >= 0.0) || !(phi < kPi / 2.0) || !std::isfinite(phi))
        throw std::invalid_argument("DiscreteParams: phi must lie in [0, pi/2)");
    if (marked >= n) throw std::invalid_argument("DiscreteParams: marked vertex out of range");
}

double ReducedState3::norm() const {
    return std::sqrt(std::norm(amp_ab) + std::norm(amp_ba) + std::norm(amp_bb));
}

ReducedState3 ReducedState3::from_vector(const Vector& v) {
    if (v.size() != 3) throw std::invalid_argument("ReducedState3: vector must have dim 3");
    return {v[0], v[1], v[2]};
}

Matrix reduced_operator(const DiscreteParams& p) {
    p.validate();
    const auto [ct, st] = coin_angles(p);
    const double alpha = p.hop_amplitude();
    const Complex beta = kImag * p.stay_magnitude();

    Matrix shift(3, 3);  // flip-flop: |ab> <-> |ba>, |bb> fixed
    shift(0, 1) = 1.0;
    shift(1, 0) = 1.0;
    shift(2, 2) = 1.0;

    Matrix faulty = shift;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) faulty(i, j) *= alpha;
        faulty(i, i) += beta;
    }

    Matrix coin = Matrix::identity(3);  // Grover diffusion acts on the b-vertex block
    coin(1, 1) = -ct;
    coin(1, 2) = st;
    coin(2, 1) = st;
    coin(2, 2) = ct;

    Matrix oracle = Matrix::identity(3);
    oracle(0, 0) = -1.0;

    return mat_mul(faulty, mat_mul(coin, oracle));
}

ReducedState3 initial_reduced(const DiscreteParams& p) {
    p.validate();
    const double root_n = std::sqrt(static_cast<double>(p.n));
    return {1.0 / root_n, 1.0 / root_n, std::sqrt(static_cast<double>(p.n) - 2.0) / root_n};
}

namespace {

// Unnormalized analytic eigenvectors of the reduced step.
Vector spectator_raw(double cos_theta, double sin_theta) {
    const double cot_half = (1.0 + cos_theta) / sin_theta;  // cot(theta/2)
    return {-cot_half, -cot_half, 1.0};
}

// sign = +1 builds the e^{+i sigma} vector, -1 the e^{-i sigma} one.
Vector rotating_raw(double cos_theta, double sin_theta, double sigma, double phi, int sign) {
    const Complex phase = std::polar(1.0, sign * sigma - phi);  // e^{-i(-+ sigma + phi)}
    const double csc = 1.0 / sin_theta;
    return {(1.0 - phase) * csc, (-cos_theta + phase) * csc, 1.0};
}

}  // namespace

SpectrumD spectrum(const DiscreteParams& p) {
    p.validate();
    SpectrumD s;
    s.n = p.n;
    s.phi = p.phi;

    const auto [ct, st] = coin_angles(p);
    s.cos_theta = ct;
    s.sin_theta = st;
    s.theta = std::atan2(st, ct);

    const double cphi = std::cos(p.phi);
    s.cos_sigma = (1.0 + ct) * cphi / 2.0;
    const double under = std::max(0.0, 4.0 - (1.0 + ct) * (1.0 + ct) * cphi * cphi);
    s.sin_sigma = std::sqrt(under) / 2.0;
    s.sigma = std::atan2(s.sin_sigma, s.cos_sigma);

    const Matrix u = reduced_operator(p);
    const std::array<EigenHint, 3> hints{
        EigenHint{-std::polar(1.0, p.phi), spectator_raw(ct, st)},
        EigenHint{std::polar(1.0, s.sigma), rotating_raw(ct, st, s.sigma, p.phi, +1)},
        EigenHint{std::polar(1.0, -s.sigma), rotating_raw(ct, st, s.sigma, p.phi, -1)}};

    auto pairs = unitary_eigensystem_3(u, hints);
    for (const auto& pair : pairs)
        if (pair.residual > 1e-10)
            throw AnalyticMismatchError("spectrum: eigenpair residual exceeds 1e-10");

    s.spectator = pairs[0];
    s.rot_plus = pairs[1];
    s.rot_minus = pairs[2];
    return s;
}

std::pair<Vector, Vector> sum_diff_vectors(const SpectrumD& s) {
    const Vector plus = rotating_raw(s.cos_theta, s.sin_theta, s.sigma, s.phi, +1);
    const Vector minus = rotating_raw(s.cos_theta, s.sin_theta, s.sigma, s.phi, -1);
    // Third components come out exactly 2 and 0: both raw vectors end in 1.
    return {add(plus, minus), sub(plus, minus)};
}

double predicted_runtime(const DiscreteParams& p) {
    return kPi / (2.0 * spectrum(p).sigma);
}

double predicted_peak_probability(const DiscreteParams& p) {
    p.validate();
    const double c = p.barrier_coefficient();
    return 1.0 / (c * c + 2.0);
}

ProbabilitySeries simulate_reduced(const DiscreteParams& p, std::size_t steps) {
    p.validate();
    const Matrix u = reduced_operator(p);
    Vector state = initial_reduced(p).to_vector();

    ProbabilitySeries series;
    series.abscissa = Abscissa::Step;
    series.params = p;
    series.samples.reserve(steps + 1);
    series.samples.push_back({0.0, std::norm(state[0])});
    for (std::size_t t = 1; t <= steps; ++t) {
        state = mat_vec(u, state);
        series.samples.push_back({static_cast<double>(t), std::norm(state[0])});
    }
    return series;
}

FullCoinedState FullCoinedState::uniform(std::size_t n) {
    FullCoinedState s;
    s.n = n;
    s.amplitudes.assign(n * (n - 1),
                        Complex{1.0 / std::sqrt(static_cast<double>(n) * (n - 1.0)), 0.0});
    return s;
}

double FullCoinedState::vertex_probability(std::size_t v) const {
    double acc = 0.0;
    const std::size_t base = v * (n - 1);
    for (std::size_t k = 0; k < n - 1; ++k) acc += std::norm(amplitudes[base + k]);
    return acc;
}

double FullCoinedState::norm() const { return norm2(amplitudes); }

void apply_oracle(const DiscreteParams& p, FullCoinedState& s) {
    const std::size_t base = p.marked * (p.n - 1);
    for (std::size_t k = 0; k < p.n - 1; ++k) s.amplitudes[base + k] = -s.amplitudes[base + k];
}

void apply_coin(const DiscreteParams& p, FullCoinedState& s) {
    // Grover diffusion per vertex block: amp <- 2 mean - amp.
    const std::size_t d = p.n - 1;
    for (std::size_t v = 0; v < p.n; ++v) {
        const std::size_t base = v * d;
        Complex mean{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k) mean += s.amplitudes[base + k];
        mean /= static_cast<double>(d);
        for (std::size_t k = 0; k < d; ++k)
            s.amplitudes[base + k] = 2.0 * mean - s.amplitudes[base + k];
    }
}

void apply_faulty_shift(const DiscreteParams& p, FullCoinedState& s) {
    // new(v,w) = cos(phi) old(w,v) + i sin(phi) old(v,w)
    const double alpha = p.hop_amplitude();
    const Complex beta = kImag * p.stay_magnitude();
    Vector out(s.amplitudes.size());
    for (std::size_t v = 0; v < p.n; ++v)
        for (std::size_t w = 0; w < p.n; ++w) {
            if (w == v) continue;
            out[s.index(v, w)] =
                alpha * s.amplitudes[s.index(w, v)] + beta * s.amplitudes[s.index(v, w)];
        }
    s.amplitudes = std::move(out);
}

FullCoinedState full_operator_apply(const DiscreteParams& p, const FullCoinedState& s,
                                    std::size_t oracle_cap) {
    p.validate();
    check_oracle_cap(p, oracle_cap);
    if (s.n != p.n || s.amplitudes.size() != s.dim())
        throw std::invalid_argument("full_operator_apply: state has wrong dimensions");

    FullCoinedState out = s;
    apply_oracle(p, out);
    apply_coin(p, out);
    apply_faulty_shift(p, out);
    return out;
}

ProbabilitySeries simulate_full(const DiscreteParams& p, std::size_t steps,
                                std::size_t oracle_cap) {
    p.validate();
    check_oracle_cap(p, oracle_cap);
    FullCoinedState state = FullCoinedState::uniform(p.n);

    ProbabilitySeries series;
    series.abscissa = Abscissa::Step;
    series.params = p;
    series.samples.reserve(steps + 1);
    series.samples.push_back({0.0, state.vertex_probability(p.marked)});
    for (std::size_t t = 1; t <= steps; ++t) {
        apply_oracle(p, state);
        apply_coin(p, state);
        apply_faulty_shift(p, state);
        series.samples.push_back({static_cast<double>(t), state.vertex_probability(p.marked)});
    }
    return series;
}

}  // namespace qws
