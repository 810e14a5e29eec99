// Acceptance suite: end-to-end checks of the whole library, one line per
// criterion. Each criterion pins its own tolerances; the process exits with
// the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qws/analysis.hpp"
#include "qws/continuous_walk.hpp"
#include "qws/discrete_walk.hpp"
#include "qws/numerics.hpp"

using namespace qws;

namespace {

constexpr Complex kImag{0.0, 1.0};

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion-%d %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::size_t default_steps(std::size_t n) {
    return static_cast<std::size_t>(
        std::ceil(3.0 * kPi * std::sqrt(static_cast<double>(n)) / (2.0 * std::sqrt(2.0))));
}

// 1. Barrier-free search: peaks at 36/71/142 (+-1) with probability 0.5 +- 0.02.
void criterion_1() {
    const std::size_t sizes[] = {1024, 4096, 16384};
    const double steps_expected[] = {36.0, 71.0, 142.0};
    bool pass = true;
    double worst_dp = 0.0, worst_dx = 0.0;
    for (int i = 0; i < 3; ++i) {
        const DiscreteParams p{sizes[i], 0.0, 0};
        const auto peak = first_peak_smoothed(simulate_reduced(p, default_steps(sizes[i])));
        worst_dx = std::max(worst_dx, std::abs(peak.x - steps_expected[i]));
        worst_dp = std::max(worst_dp, std::abs(peak.p - 0.5));
        if (std::abs(peak.x - steps_expected[i]) > 1.0 || std::abs(peak.p - 0.5) > 0.02)
            pass = false;
    }
    report(1, "barrier-free-peaks", pass,
           "worst step offset " + fmt(worst_dx) + ", worst probability deviation " +
               fmt(worst_dp));
}

// 2. Critical barrier phi = 1/sqrt(N): peaks at 29/58/116 (+-1) with probability
//    1/3 +- 0.02.
void criterion_2() {
    const std::size_t sizes[] = {1024, 4096, 16384};
    const double steps_expected[] = {29.0, 58.0, 116.0};
    bool pass = true;
    double worst_dp = 0.0, worst_dx = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double phi = 1.0 / std::sqrt(static_cast<double>(sizes[i]));
        const DiscreteParams p{sizes[i], phi, 0};
        const auto peak = first_peak_smoothed(simulate_reduced(p, default_steps(sizes[i])));
        worst_dx = std::max(worst_dx, std::abs(peak.x - steps_expected[i]));
        worst_dp = std::max(worst_dp, std::abs(peak.p - 1.0 / 3.0));
        if (std::abs(peak.x - steps_expected[i]) > 1.0 || std::abs(peak.p - 1.0 / 3.0) > 0.02)
            pass = false;
    }
    report(2, "critical-barrier-peaks", pass,
           "worst step offset " + fmt(worst_dx) + ", worst probability deviation " +
               fmt(worst_dp));
}

// 3. Super-threshold stagnation: peak probability strictly decreasing in N for
//    phi = N^{-1/4} and phi = 0.02; for phi = 0.02 at N = 65536 the maximum over
//    3 pi sqrt(N) / (2 sqrt(2)) steps stays below 0.05.
void criterion_3() {
    const std::vector<std::size_t> sizes{1024, 4096, 16384, 65536};
    bool pass = true;
    for (const ScalingFamily family : {ScalingFamily{1.0, -0.25}, ScalingFamily{0.02, 0.0}}) {
        const auto rows = sweep_discrete(family, sizes);
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (!(rows[i].peak_p < rows[i - 1].peak_p)) pass = false;
    }
    const auto series = simulate_reduced({65536, 0.02, 0}, default_steps(65536));
    double max_p = 0.0;
    for (const auto& s : series.samples) max_p = std::max(max_p, s.p);
    if (!(max_p < 0.05)) pass = false;
    report(3, "superthreshold-stagnation", pass,
           "max probability at N=65536, phi=0.02: " + fmt(max_p));
}

// 4. Full-space vs reduced simulation: pointwise within 1e-10 over 200 steps.
void criterion_4() {
    double worst = 0.0;
    for (std::size_t n : {std::size_t{8}, std::size_t{16}, std::size_t{32}})
        for (double phi : {0.0, 0.1, 0.3, 1.0}) {
            const DiscreteParams p{n, phi, 0};
            const auto reduced = simulate_reduced(p, 200);
            const auto full = simulate_full(p, 200);
            for (std::size_t t = 0; t < reduced.samples.size(); ++t)
                worst = std::max(worst, std::abs(reduced.samples[t].p - full.samples[t].p));
        }
    report(4, "discrete-oracle-equivalence", worst <= 1e-10, "max pointwise gap " + fmt(worst));
}

// 5. Analytic eigensystem residuals below 1e-10 across the (N, phi) grid.
void criterion_5() {
    double worst = 0.0;
    for (std::size_t n = 4; n <= 16384; n *= 2)
        for (double phi : {0.0, 0.01, 0.1, 0.5, 1.0}) {
            const DiscreteParams p{n, phi, 0};
            const Matrix u = reduced_operator(p);
            for (const auto& pair : spectrum(p).basis()) {
                const Vector lhs = mat_vec(u, pair.vector);
                worst = std::max(worst, norm2(sub(lhs, scaled(pair.vector, pair.value))));
            }
        }
    report(5, "eigen-residuals", worst < 1e-10, "max residual " + fmt(worst));
}

// 6. Evolution identity: U^{pi/(2 sigma)} maps the rotating-pair sum to i times
//    the difference, within 1e-10 on the same grid.
void criterion_6() {
    double worst = 0.0;
    for (std::size_t n = 4; n <= 16384; n *= 2)
        for (double phi : {0.0, 0.01, 0.1, 0.5, 1.0}) {
            const auto s = spectrum({n, phi, 0});
            const auto [sum, diff] = sum_diff_vectors(s);
            const Vector evolved =
                unitary_fractional_power_apply(s.basis(), kPi / (2.0 * s.sigma), sum);
            worst = std::max(worst, norm2(sub(evolved, scaled(diff, kImag))));
        }
    report(6, "evolution-identity", worst <= 1e-10, "max deviation " + fmt(worst));
}

// 7. Continuous barrier-free search: success >= 0.999 at t = pi sqrt(1024)/2
//    with dt = 0.01, and the gap equals 2/sqrt(N) within 1e-12.
void criterion_7() {
    ContinuousParams p;
    p.n = 1024;
    p.gamma_n = 1.0;
    p.epsilon = 0.0;
    p.t_max = 55.0;
    p.dt = 0.01;
    const auto series = success_series_c(p);
    const double t_star = kPi * std::sqrt(1024.0) / 2.0;
    const auto k = static_cast<std::size_t>(std::llround(t_star / p.dt));
    const double p_at_star = series.samples[k].p;
    const double gap_dev = std::abs(spectrum_c(p).gap - 2.0 / std::sqrt(1024.0));
    const bool pass = p_at_star >= 0.999 && gap_dev <= 1e-12;
    report(7, "continuous-barrier-free", pass,
           "P(t*) = " + fmt(p_at_star) + ", gap deviation " + fmt(gap_dev));
}

// 8. Continuous oracle equivalence: RK4 integration within 1e-8 of the exact
//    2D evolution over [0, 2 pi sqrt(N)], and the identity-shift variant within
//    1e-9 of the default.
void criterion_8() {
    double worst_eq = 0.0, worst_shift = 0.0;
    for (std::size_t n : {std::size_t{16}, std::size_t{32}, std::size_t{64}})
        for (double eps : {0.0, 0.1, 0.3}) {
            ContinuousParams p;
            p.n = n;
            p.gamma_n = 1.0;
            p.epsilon = eps;
            p.t_max = 2.0 * kPi * std::sqrt(static_cast<double>(n));
            p.dt = 0.1;
            const auto exact = success_series_c(p);
            const auto rk = integrate_full_c(p);
            IntegrateOptions no_shift;
            no_shift.terms.include_identity_shift = false;
            const auto rk_plain = integrate_full_c(p, no_shift);
            for (std::size_t k = 0; k < exact.samples.size(); ++k) {
                worst_eq = std::max(worst_eq, std::abs(exact.samples[k].p - rk.samples[k].p));
                worst_shift =
                    std::max(worst_shift, std::abs(rk.samples[k].p - rk_plain.samples[k].p));
            }
        }
    const bool pass = worst_eq <= 1e-8 && worst_shift <= 1e-9;
    report(8, "continuous-oracle-equivalence", pass,
           "max integration gap " + fmt(worst_eq) + ", max identity-shift gap " +
               fmt(worst_shift));
}

// 9. Compensation: gamma N = 1/(1 - eps) with barrier eps reproduces the
//    barrier-free series within 1e-12.
void criterion_9() {
    ContinuousParams base;
    base.n = 1024;
    base.gamma_n = 1.0;
    base.epsilon = 0.0;
    base.t_max = 150.0;
    base.dt = 0.5;
    const auto ref = success_series_c(base);
    double worst = 0.0;
    for (double eps : {0.1, 0.5, 0.9}) {
        ContinuousParams comp = base;
        comp.epsilon = eps;
        comp.gamma_n = 1.0 / (1.0 - eps);
        const auto series = success_series_c(comp);
        for (std::size_t k = 0; k < ref.samples.size(); ++k)
            worst = std::max(worst, std::abs(ref.samples[k].p - series.samples[k].p));
    }
    report(9, "compensation-property", worst <= 1e-12, "max pointwise gap " + fmt(worst));
}

// 10. Unitarity and norm conservation: every constructed step operator passes
//     is_unitary at 1e-10, and 10^4 reduced steps drift below 1e-9 in norm.
void criterion_10() {
    double worst_unit = 0.0;
    for (std::size_t n = 4; n <= 16384; n *= 2)
        for (double phi : {0.0, 0.01, 0.1, 0.5, 1.0}) {
            worst_unit = std::max(worst_unit, unitarity_deviation(reduced_operator({n, phi, 0})));
            Matrix f(3, 3);
            f(0, 1) = f(1, 0) = f(2, 2) = std::cos(phi);
            for (std::size_t i = 0; i < 3; ++i) f(i, i) += kImag * std::sin(phi);
            worst_unit = std::max(worst_unit, unitarity_deviation(f));
        }

    const DiscreteParams p{1024, 0.3, 0};
    const Matrix u = reduced_operator(p);
    Vector state = initial_reduced(p).to_vector();
    double worst_drift = 0.0;
    for (int t = 0; t < 10000; ++t) {
        state = mat_vec(u, state);
        worst_drift = std::max(worst_drift, std::abs(norm2(state) - 1.0));
    }
    const bool pass = worst_unit <= 1e-10 && worst_drift < 1e-9;
    report(10, "unitarity-and-norm", pass,
           "max unitarity deviation " + fmt(worst_unit) + ", max norm drift " +
               fmt(worst_drift));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria failed\n", failures);
    return failures;
}
