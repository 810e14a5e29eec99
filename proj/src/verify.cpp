#include "qws/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "qws/analysis.hpp"
#include "qws/continuous_walk.hpp"
#include "qws/discrete_walk.hpp"
#include "qws/numerics.hpp"

namespace qws {

namespace {

constexpr Complex kImag{0.0, 1.0};

std::vector<std::size_t> spectral_sizes() {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 4; n <= 16384; n *= 2) sizes.push_back(n);
    return sizes;
}

const std::vector<double> kPhiGrid{0.0, 0.01, 0.1, 0.5, 1.0};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CheckResult check_reduced_unitarity() {
    double worst = 0.0;
    for (std::size_t n : spectral_sizes())
        for (double phi : kPhiGrid)
            worst = std::max(worst, unitarity_deviation(reduced_operator({n, phi, 0})));
    return {"reduced-operator-unitarity", worst <= 1e-10, "max deviation " + fmt(worst)};
}

CheckResult check_faulty_shift_unitarity() {
    double worst = 0.0;
    for (double phi : {0.0, 0.01, 0.3, 1.0, 1.5}) {
        Matrix f(3, 3);
        f(0, 1) = f(1, 0) = f(2, 2) = std::cos(phi);
        for (std::size_t i = 0; i < 3; ++i) f(i, i) += kImag * std::sin(phi);
        worst = std::max(worst, unitarity_deviation(f));
    }
    return {"faulty-shift-unitarity", worst <= 1e-12, "max deviation " + fmt(worst)};
}

CheckResult check_eigen_residuals() {
    double worst = 0.0;
    for (std::size_t n : spectral_sizes())
        for (double phi : kPhiGrid) {
            const auto s = spectrum({n, phi, 0});
            for (const auto& pair : s.basis()) worst = std::max(worst, pair.residual);
        }
    return {"eigen-residuals", worst <= 1e-10, "max residual " + fmt(worst)};
}

CheckResult check_evolution_identity() {
    double worst = 0.0;
    for (std::size_t n : spectral_sizes())
        for (double phi : kPhiGrid) {
            const auto s = spectrum({n, phi, 0});
            const auto [sum, diff] = sum_diff_vectors(s);
            const Vector evolved =
                unitary_fractional_power_apply(s.basis(), kPi / (2.0 * s.sigma), sum);
            worst = std::max(worst, norm2(sub(evolved, scaled(diff, kImag))));
        }
    return {"evolution-identity", worst <= 1e-10, "max deviation " + fmt(worst)};
}

CheckResult check_reduced_norm_drift() {
    const DiscreteParams p{1024, 0.3, 0};
    const Matrix u = reduced_operator(p);
    Vector state = initial_reduced(p).to_vector();
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) {
        state = mat_vec(u, state);
        worst = std::max(worst, std::abs(norm2(state) - 1.0));
    }
    return {"reduced-norm-drift-10k", worst < 1e-9, "max drift " + fmt(worst)};
}

CheckResult check_discrete_oracle_equivalence(std::size_t cap) {
    std::vector<std::size_t> sizes;
    for (std::size_t n : {std::size_t{8}, std::size_t{16}, std::size_t{32}})
        if (n <= cap) sizes.push_back(n);
    if (sizes.empty())
        return {"discrete-oracle-equivalence", false, "oracle cap too small to run"};

    double worst = 0.0;
    for (std::size_t n : sizes)
        for (double phi : {0.0, 0.1, 0.3, 1.0}) {
            const DiscreteParams p{n, phi, 0};
            const auto reduced = simulate_reduced(p, 200);
            const auto full = simulate_full(p, 200, cap);
            for (std::size_t t = 0; t < reduced.samples.size(); ++t)
                worst = std::max(worst,
                                 std::abs(reduced.samples[t].p - full.samples[t].p));
        }
    return {"discrete-oracle-equivalence", worst <= 1e-10, "max pointwise gap " + fmt(worst)};
}

CheckResult check_subspace_closure(std::size_t cap) {
    const std::size_t n = std::min<std::size_t>(16, cap);
    if (n < 8) return {"subspace-closure", false, "oracle cap too small to run"};
    const DiscreteParams p{n, 0.3, 0};

    // Orthonormal reduced basis embedded in the full coined space.
    FullCoinedState proto = FullCoinedState::uniform(n);
    const double d = static_cast<double>(n - 1);
    Vector e_ab(proto.dim(), Complex{0.0, 0.0});
    Vector e_ba(proto.dim(), Complex{0.0, 0.0});
    Vector e_bb(proto.dim(), Complex{0.0, 0.0});
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            const std::size_t idx = proto.index(v, w);
            if (v == p.marked)
                e_ab[idx] = 1.0 / std::sqrt(d);
            else if (w == p.marked)
                e_ba[idx] = 1.0 / std::sqrt(d);
            else
                e_bb[idx] = 1.0 / std::sqrt(d * (d - 1.0));
        }

    FullCoinedState state = FullCoinedState::uniform(n);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        state = full_operator_apply(p, state, cap);
        Vector projected(state.amplitudes.size(), Complex{0.0, 0.0});
        for (const auto& basis : {e_ab, e_ba, e_bb}) {
            const Complex coeff = inner(basis, state.amplitudes);
            for (std::size_t i = 0; i < projected.size(); ++i) projected[i] += coeff * basis[i];
        }
        worst = std::max(worst, norm2(sub(state.amplitudes, projected)));
    }
    return {"subspace-closure", worst < 1e-10, "max projector residual " + fmt(worst)};
}

CheckResult check_barrier_free_stationarity(std::size_t cap) {
    const std::size_t n = std::min<std::size_t>(16, cap);
    if (n < 8) return {"barrier-free-stationarity", false, "oracle cap too small to run"};
    double worst = 0.0;
    for (double phi : {0.0, 0.3, 1.0, 1.5}) {
        const DiscreteParams p{n, phi, 0};
        FullCoinedState state = FullCoinedState::uniform(n);
        // Walk step without the oracle: the uniform state is fixed up to the
        // global phase e^{i phi} picked up from the faulty shift.
        const Vector expected = scaled(state.amplitudes, std::polar(1.0, phi));
        apply_coin(p, state);
        apply_faulty_shift(p, state);
        worst = std::max(worst, norm2(sub(state.amplitudes, expected)));
    }
    return {"barrier-free-stationarity", worst <= 1e-12, "max displacement " + fmt(worst)};
}

CheckResult check_continuous_gap_closed_form() {
    double worst = 0.0;
    for (std::size_t n : {std::size_t{2}, std::size_t{4}, std::size_t{64}, std::size_t{1024},
                          std::size_t{65536}})
        for (double gamma_n : {0.5, 1.0, 2.0})
            for (double eps : {0.0, 0.3, 0.9}) {
                ContinuousParams p;
                p.n = n;
                p.gamma_n = gamma_n;
                p.epsilon = eps;
                p.t_max = 1.0;
                const auto s = spectrum_c(p);
                const double geff_n = gamma_n * (1.0 - eps);
                const double closed = std::sqrt((1.0 - geff_n) * (1.0 - geff_n) +
                                                4.0 * p.effective_gamma());
                worst = std::max(worst, std::abs(s.gap - closed));
            }
    return {"continuous-gap-closed-form", worst <= 1e-12, "max deviation " + fmt(worst)};
}

std::vector<std::size_t> continuous_check_sizes(std::size_t cap) {
    std::vector<std::size_t> sizes;
    for (std::size_t n : {std::size_t{16}, std::size_t{32}, std::size_t{64}})
        if (n <= cap) sizes.push_back(n);
    return sizes;
}

CheckResult check_continuous_oracle_equivalence(std::size_t cap) {
    const auto sizes = continuous_check_sizes(cap);
    if (sizes.empty())
        return {"continuous-oracle-equivalence", false, "oracle cap too small to run"};
    double worst = 0.0;
    for (std::size_t n : sizes)
        for (double eps : {0.0, 0.1, 0.3}) {
            ContinuousParams p;
            p.n = n;
            p.gamma_n = 1.0;
            p.epsilon = eps;
            p.t_max = 2.0 * kPi * std::sqrt(static_cast<double>(n));
            p.dt = 0.1;
            const auto exact = success_series_c(p);
            IntegrateOptions opts;
            opts.oracle_cap = cap;
            const auto integrated = integrate_full_c(p, opts);
            for (std::size_t k = 0; k < exact.samples.size(); ++k)
                worst = std::max(worst,
                                 std::abs(exact.samples[k].p - integrated.samples[k].p));
        }
    return {"continuous-oracle-equivalence", worst <= 1e-8, "max pointwise gap " + fmt(worst)};
}

CheckResult check_identity_shift_irrelevance(std::size_t cap) {
    const auto sizes = continuous_check_sizes(cap);
    if (sizes.empty())
        return {"identity-shift-irrelevance", false, "oracle cap too small to run"};
    double worst = 0.0;
    for (std::size_t n : sizes) {
        ContinuousParams p;
        p.n = n;
        p.gamma_n = 1.0;
        p.epsilon = 0.3;
        p.t_max = 2.0 * kPi * std::sqrt(static_cast<double>(n));
        p.dt = 0.1;
        IntegrateOptions with;
        with.oracle_cap = cap;
        IntegrateOptions without = with;
        without.terms.include_identity_shift = false;
        const auto a = integrate_full_c(p, with);
        const auto b = integrate_full_c(p, without);
        for (std::size_t k = 0; k < a.samples.size(); ++k)
            worst = std::max(worst, std::abs(a.samples[k].p - b.samples[k].p));
    }
    return {"identity-shift-irrelevance", worst <= 1e-9, "max pointwise gap " + fmt(worst)};
}

CheckResult check_compensation_property() {
    ContinuousParams base;
    base.n = 1024;
    base.gamma_n = 1.0;
    base.epsilon = 0.0;
    base.t_max = 150.0;
    base.dt = 0.5;
    const auto reference = success_series_c(base);

    double worst = 0.0;
    for (double eps : {0.1, 0.5, 0.9}) {
        ContinuousParams comp = base;
        comp.epsilon = eps;
        comp.gamma_n = 1.0 / (1.0 - eps);
        const auto series = success_series_c(comp);
        for (std::size_t k = 0; k < reference.samples.size(); ++k)
            worst = std::max(worst, std::abs(reference.samples[k].p - series.samples[k].p));
    }
    return {"compensation-property", worst <= 1e-12, "max pointwise gap " + fmt(worst)};
}

CheckResult check_peak_predictions(const char* name, double exponent, double tol_p,
                                   double tol_t_rel) {
    const ScalingFamily family{1.0, exponent};
    const auto rows = sweep_discrete(family, {1024, 4096, 16384});
    const auto report = verify_predictions(rows, tol_p, tol_t_rel);
    return {name, report.all_pass,
            "worst dev_p " + fmt(report.worst_dev_p) + ", worst dev_t_rel " +
                fmt(report.worst_dev_t_rel)};
}

CheckResult check_superthreshold_stagnation() {
    const std::vector<std::size_t> sizes{1024, 4096, 16384, 65536};
    bool pass = true;
    std::string detail;

    for (const ScalingFamily family : {ScalingFamily{1.0, -0.25}, ScalingFamily{0.02, 0.0}}) {
        const auto rows = sweep_discrete(family, sizes);
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (!(rows[i].peak_p < rows[i - 1].peak_p)) pass = false;
    }

    // Constant barrier at the largest size: the walk barely leaves 1/N.
    const DiscreteParams p{65536, 0.02, 0};
    const std::size_t steps =
        static_cast<std::size_t>(std::ceil(3.0 * kPi * 256.0 / (2.0 * std::sqrt(2.0))));
    const auto series = simulate_reduced(p, steps);
    double max_p = 0.0;
    for (const auto& sample : series.samples) max_p = std::max(max_p, sample.p);
    if (!(max_p < 0.05)) pass = false;
    detail = "max probability at N=65536 " + fmt(max_p);

    return {"superthreshold-stagnation", pass, detail};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    using Check = std::pair<const char*, std::function<CheckResult()>>;
    const std::vector<Check> checks{
        {"reduced-operator-unitarity", [] { return check_reduced_unitarity(); }},
        {"faulty-shift-unitarity", [] { return check_faulty_shift_unitarity(); }},
        {"eigen-residuals", [] { return check_eigen_residuals(); }},
        {"evolution-identity", [] { return check_evolution_identity(); }},
        {"reduced-norm-drift-10k", [] { return check_reduced_norm_drift(); }},
        {"discrete-oracle-equivalence",
         [&] { return check_discrete_oracle_equivalence(opts.oracle_cap); }},
        {"subspace-closure", [&] { return check_subspace_closure(opts.oracle_cap); }},
        {"barrier-free-stationarity",
         [&] { return check_barrier_free_stationarity(opts.oracle_cap); }},
        {"continuous-gap-closed-form", [] { return check_continuous_gap_closed_form(); }},
        {"continuous-oracle-equivalence",
         [&] { return check_continuous_oracle_equivalence(opts.oracle_cap); }},
        {"identity-shift-irrelevance",
         [&] { return check_identity_shift_irrelevance(opts.oracle_cap); }},
        {"compensation-property", [] { return check_compensation_property(); }},
        {"subthreshold-peak-predictions",
         [&] {
             return check_peak_predictions("subthreshold-peak-predictions", -0.75, opts.tol_p,
                                           opts.tol_t_rel);
         }},
        {"critical-peak-predictions",
         [&] {
             return check_peak_predictions("critical-peak-predictions", -0.5, opts.tol_p,
                                           opts.tol_t_rel);
         }},
        {"superthreshold-stagnation", [] { return check_superthreshold_stagnation(); }},
    };

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& [name, check] : checks) {
        try {
            results.push_back(check());
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return results;
}

}  // namespace qws
