#include <doctest.h>

#include <cmath>
#include <random>

#include "qws/analysis.hpp"
#include "qws/discrete_walk.hpp"

using namespace qws;

namespace {

constexpr Complex I{0.0, 1.0};

// The search step written out entry by entry, independent of the operator
// product used by the implementation.
Matrix closed_form_step(std::size_t n, double phi) {
    const double nn = static_cast<double>(n);
    const double ct = (nn - 3.0) / (nn - 1.0);
    const double st = 2.0 * std::sqrt(nn - 2.0) / (nn - 1.0);
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const Complex eip = std::polar(1.0, phi);

    Matrix u(3, 3);
    u(0, 0) = -I * sp;
    u(0, 1) = -cp * ct;
    u(0, 2) = cp * st;
    u(1, 0) = -cp;
    u(1, 1) = -I * sp * ct;
    u(1, 2) = I * sp * st;
    u(2, 0) = 0.0;
    u(2, 1) = eip * st;
    u(2, 2) = eip * ct;
    return u;
}

double max_entry_gap(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

void check_series_invariants(const ProbabilitySeries& s) {
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        CHECK(s.samples[i].p >= 0.0);
        CHECK(s.samples[i].p <= 1.0 + 1e-9);
        if (i > 0) CHECK(s.samples[i].x > s.samples[i - 1].x);
    }
}

}  // namespace

TEST_CASE("DiscreteParams: invalid parameters are rejected") {
    auto rejects = [](DiscreteParams p) { CHECK_THROWS_AS(p.validate(), std::invalid_argument); };
    rejects({2, 0.0, 0});
    rejects({16, kPi / 2.0, 0});
    rejects({16, -0.1, 0});
    rejects({16, 0.1, 16});
    const DiscreteParams ok{3, 0.0, 2};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("reduced_operator: matches the closed-form entries") {
    for (std::size_t n : {3u, 4u, 10u, 1024u})
        for (double phi : {0.0, 0.2, 1.0, 1.5})
            CHECK(max_entry_gap(reduced_operator({n, phi, 0}), closed_form_step(n, phi)) <= 1e-15);
}

TEST_CASE("reduced_operator: barrier-free specializations") {
    const std::size_t n = 16;
    const double ct = (16.0 - 3.0) / 15.0;
    const double st = 2.0 * std::sqrt(14.0) / 15.0;
    const Matrix u = reduced_operator({n, 0.0, 0});
    CHECK(std::abs(u(0, 0)) <= 1e-15);
    CHECK(u(0, 1).real() == doctest::Approx(-ct).epsilon(1e-14));
    CHECK(u(0, 2).real() == doctest::Approx(st).epsilon(1e-14));
    CHECK(u(1, 0).real() == doctest::Approx(-1.0));

    // All entries real at phi = 0.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(u(i, j).imag()) <= 1e-15);
    CHECK(is_unitary(u, 1e-12));
}

TEST_CASE("reduced_operator: barrier phase enters the bottom row") {
    // At N = 4: sin(theta) = 2 sqrt(2) / 3, and entry (2,1) is e^{i phi} sin(theta).
    const Matrix u = reduced_operator({4, 0.2, 0});
    const Complex expected = std::polar(1.0, 0.2) * (2.0 * std::sqrt(2.0) / 3.0);
    CHECK(std::abs(u(2, 1) - expected) <= 1e-15);
}

TEST_CASE("reduced_operator: unitary across the parameter grid") {
    for (std::size_t n = 4; n <= 16384; n *= 4)
        for (double phi : {0.0, 0.01, 0.5, 1.2})
            CHECK(unitarity_deviation(reduced_operator({n, phi, 0})) <= 1e-12);
}

TEST_CASE("initial_reduced: uniform state components") {
    const auto s3 = initial_reduced({3, 0.0, 0});
    CHECK(s3.amp_ab.real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(s3.amp_ba.real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(s3.amp_bb.real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

    const auto s4 = initial_reduced({4, 0.0, 0});
    CHECK(s4.amp_ab.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s4.amp_ba.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s4.amp_bb.real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    for (std::size_t n : {3u, 7u, 100u, 65536u})
        CHECK(initial_reduced({n, 0.0, 0}).norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectrum: angles satisfy the trig identities") {
    for (std::size_t n : {4u, 64u, 16384u})
        for (double phi : {0.0, 0.3, 1.0}) {
            const auto s = spectrum({n, phi, 0});
            CHECK(s.cos_theta * s.cos_theta + s.sin_theta * s.sin_theta ==
                  doctest::Approx(1.0).epsilon(1e-14));
            CHECK(s.cos_sigma * s.cos_sigma + s.sin_sigma * s.sin_sigma ==
                  doctest::Approx(1.0).epsilon(1e-14));
        }
}

TEST_CASE("spectrum: N = 4 barrier-free rotation rate") {
    // cos(theta) = 1/3, so cos(sigma) = (1 + 1/3)/2 = 2/3.
    const auto s = spectrum({4, 0.0, 0});
    CHECK(s.cos_sigma == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("spectrum: eigenpairs satisfy the operator equation") {
    for (std::size_t n : {4u, 32u, 1024u})
        for (double phi : {0.0, 0.1, 1.0}) {
            const DiscreteParams p{n, phi, 0};
            const Matrix u = reduced_operator(p);
            const auto s = spectrum(p);
            CHECK(std::abs(s.spectator.value - (-std::polar(1.0, phi))) <= 1e-14);
            CHECK(std::abs(s.rot_plus.value - std::polar(1.0, s.sigma)) <= 1e-14);
            CHECK(std::abs(s.rot_minus.value - std::polar(1.0, -s.sigma)) <= 1e-14);
            for (const auto& pair : s.basis()) {
                const Vector lhs = mat_vec(u, pair.vector);
                CHECK(norm2(sub(lhs, scaled(pair.vector, pair.value))) <= 1e-10);
            }
        }
}

TEST_CASE("spectrum: barrier-free rate approaches the closed-form runtime scale") {
    // sigma -> sqrt(8/N)/2 at phi = 0, so pi/(2 sigma) -> pi sqrt(N)/(2 sqrt(2)).
    const std::size_t n = 16384;
    const auto s = spectrum({n, 0.0, 0});
    const double expected = kPi * std::sqrt(static_cast<double>(n)) / (2.0 * std::sqrt(2.0));
    CHECK(kPi / (2.0 * s.sigma) == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("sum_diff_vectors: exact third components and closed forms") {
    for (std::size_t n : {4u, 100u, 4096u})
        for (double phi : {0.0, 0.4, 1.3}) {
            const auto s = spectrum({n, phi, 0});
            const auto [sum, diff] = sum_diff_vectors(s);
            CHECK(sum[2] == Complex{2.0, 0.0});
            CHECK(diff[2] == Complex{0.0, 0.0});

            // Alternative closed forms of the same first components.
            const double csc = 1.0 / s.sin_theta;
            const Complex eimp = std::polar(1.0, -phi);
            const Complex sum0 = 2.0 * (1.0 - eimp * s.cos_sigma) * csc;
            const Complex diff0 = -2.0 * I * eimp * s.sin_sigma * csc;
            CHECK(std::abs(sum[0] - sum0) <= 1e-12 * std::abs(sum0) + 1e-14);
            CHECK(std::abs(diff[0] - diff0) <= 1e-12 * std::abs(diff0) + 1e-14);
        }
}

TEST_CASE("sum_diff_vectors: critical-family limits at large N") {
    // With c = phi sqrt(N) = 1 the first components approach i and -i sqrt(3).
    const std::size_t n = 1000000;
    const auto s = spectrum({n, 1.0 / std::sqrt(static_cast<double>(n)), 0});
    const auto [sum, diff] = sum_diff_vectors(s);
    CHECK(std::abs(sum[0] - I) <= 0.01);
    CHECK(std::abs(diff[0] - (-I * std::sqrt(3.0))) <= 0.01);
}

TEST_CASE("predicted_runtime: matches the reported step counts") {
    CHECK(predicted_runtime({1024, 0.0, 0}) == doctest::Approx(35.52).epsilon(0.002));
    CHECK(predicted_runtime({16384, 0.0, 0}) == doctest::Approx(142.17).epsilon(0.002));
    CHECK(predicted_runtime({1024, 1.0 / 32.0, 0}) == doctest::Approx(29.01).epsilon(0.002));
}

TEST_CASE("predicted_peak_probability: 1/(c^2 + 2)") {
    CHECK(predicted_peak_probability({1024, 0.0, 0}) == doctest::Approx(0.5).epsilon(1e-15));
    const double phi_c1 = 1.0 / std::sqrt(1024.0);
    CHECK(predicted_peak_probability({1024, phi_c1, 0}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    const double phi_c2 = 2.0 / std::sqrt(1024.0);
    CHECK(predicted_peak_probability({1024, phi_c2, 0}) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("simulate_reduced: starts at 1/N and peaks where predicted") {
    const DiscreteParams p{1024, 0.0, 0};
    const auto series = simulate_reduced(p, 120);
    CHECK(series.samples.size() == 121);
    CHECK(series.samples[0].p == doctest::Approx(1.0 / 1024.0).epsilon(1e-14));
    check_series_invariants(series);

    const auto peak = first_peak_smoothed(series);
    CHECK(std::abs(peak.x - 36.0) <= 1.0);
    CHECK(std::abs(peak.p - 0.5) <= 0.02);
}

TEST_CASE("simulate_reduced: critical barrier lowers and advances the peak") {
    const DiscreteParams p{1024, 1.0 / 32.0, 0};
    const auto series = simulate_reduced(p, 120);
    const auto peak = first_peak_smoothed(series);
    CHECK(std::abs(peak.x - 29.0) <= 1.0);
    CHECK(std::abs(peak.p - 1.0 / 3.0) <= 0.02);
}

TEST_CASE("simulate_reduced: peak degrades monotonically with the barrier") {
    double previous = 1.0;
    for (int k = 0; k <= 10; ++k) {
        const DiscreteParams p{1024, 0.01 * k, 0};
        const auto peak = first_peak_smoothed(simulate_reduced(p, 160));
        CHECK(peak.p <= previous + 1e-12);
        previous = peak.p;
    }
}

TEST_CASE("simulate_reduced: norm is preserved over long runs") {
    const DiscreteParams p{1024, 0.3, 0};
    const Matrix u = reduced_operator(p);
    Vector state = initial_reduced(p).to_vector();
    for (int t = 0; t < 10000; ++t) state = mat_vec(u, state);
    CHECK(std::abs(norm2(state) - 1.0) < 1e-9);
}

TEST_CASE("FullCoinedState: uniform state and index layout") {
    const auto s = FullCoinedState::uniform(8);
    CHECK(s.dim() == 56);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.vertex_probability(0) == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
    // (v, w) pairs are laid out lexicographically with w != v.
    CHECK(s.index(0, 1) == 0);
    CHECK(s.index(0, 7) == 6);
    CHECK(s.index(1, 0) == 7);
    CHECK(s.index(7, 6) == 55);
}

TEST_CASE("apply_faulty_shift: ideal shift is an involution") {
    const DiscreteParams p{8, 0.0, 0};
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    FullCoinedState s = FullCoinedState::uniform(8);
    for (auto& a : s.amplitudes) a = Complex(dist(rng), dist(rng));
    const Vector original = s.amplitudes;
    apply_faulty_shift(p, s);
    apply_faulty_shift(p, s);
    CHECK(norm2(sub(s.amplitudes, original)) <= 1e-14);
}

TEST_CASE("full walk without the oracle leaves the uniform state fixed") {
    // The coin preserves the uniform state and the faulty shift multiplies it
    // by cos(phi) + i sin(phi), so the state is fixed up to the global phase
    // e^{i phi} for every barrier strength.
    for (double phi : {0.0, 0.7, 1.5}) {
        const DiscreteParams p{12, phi, 0};
        FullCoinedState s = FullCoinedState::uniform(12);
        const Vector expected = scaled(s.amplitudes, std::polar(1.0, phi));
        apply_coin(p, s);
        apply_faulty_shift(p, s);
        CHECK(norm2(sub(s.amplitudes, expected)) <= 1e-12);
    }
}

TEST_CASE("simulate_full: agrees with the reduced simulation pointwise") {
    for (double phi : {0.0, 0.3}) {
        const DiscreteParams p{8, phi, 0};
        const auto reduced = simulate_reduced(p, 30);
        const auto full = simulate_full(p, 30);
        REQUIRE(full.samples.size() == reduced.samples.size());
        for (std::size_t t = 0; t < full.samples.size(); ++t)
            CHECK(std::abs(full.samples[t].p - reduced.samples[t].p) <= 1e-10);
        check_series_invariants(full);
    }
}

TEST_CASE("simulate_full: starts at 1/N") {
    const auto series = simulate_full({16, 0.3, 0}, 2);
    CHECK(series.samples[0].p == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("full_operator_apply: norm is preserved over long runs") {
    const DiscreteParams p{8, 0.3, 0};
    FullCoinedState state = FullCoinedState::uniform(8);
    for (int t = 0; t < 10000; ++t) state = full_operator_apply(p, state);
    CHECK(std::abs(state.norm() - 1.0) < 1e-10);
}

TEST_CASE("simulate_full: the marked vertex choice is unobservable") {
    const DiscreteParams a{8, 0.2, 0};
    const DiscreteParams b{8, 0.2, 3};
    const auto sa = simulate_full(a, 40);
    const auto sb = simulate_full(b, 40);
    for (std::size_t t = 0; t < sa.samples.size(); ++t)
        CHECK(std::abs(sa.samples[t].p - sb.samples[t].p) <= 1e-13);
}

TEST_CASE("full-space walk rejects sizes above the oracle cap") {
    const DiscreteParams p{128, 0.0, 0};
    CHECK_THROWS_AS(simulate_full(p, 1), OracleSizeError);
    CHECK_THROWS_AS(full_operator_apply(p, FullCoinedState::uniform(128), 64), OracleSizeError);
    CHECK_NOTHROW(simulate_full(p, 1, 128));
}

TEST_CASE("full-space evolution stays in the symmetry subspace") {
    const std::size_t n = 12;
    const DiscreteParams p{n, 0.3, 0};
    const double d = static_cast<double>(n - 1);

    FullCoinedState proto = FullCoinedState::uniform(n);
    Vector e_ab(proto.dim(), Complex{0.0, 0.0});
    Vector e_ba(proto.dim(), Complex{0.0, 0.0});
    Vector e_bb(proto.dim(), Complex{0.0, 0.0});
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            const std::size_t idx = proto.index(v, w);
            if (v == 0)
                e_ab[idx] = 1.0 / std::sqrt(d);
            else if (w == 0)
                e_ba[idx] = 1.0 / std::sqrt(d);
            else
                e_bb[idx] = 1.0 / std::sqrt(d * (d - 1.0));
        }

    FullCoinedState state = FullCoinedState::uniform(n);
    for (int t = 0; t < 60; ++t) {
        state = full_operator_apply(p, state);
        Vector projected(state.amplitudes.size(), Complex{0.0, 0.0});
        for (const auto& basis : {e_ab, e_ba, e_bb}) {
            const Complex coeff = inner(basis, state.amplitudes);
            for (std::size_t i = 0; i < projected.size(); ++i) projected[i] += coeff * basis[i];
        }
        CHECK(norm2(sub(state.amplitudes, projected)) < 1e-10);
    }
}
