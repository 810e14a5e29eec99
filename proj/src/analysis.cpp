#include "qws/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qws/continuous_walk.hpp"
#include "qws/discrete_walk.hpp"

namespace qws {

PeakResult first_peak(const ProbabilitySeries& s) {
    const auto& v = s.samples;
    if (v.size() < 3)
        throw std::invalid_argument("first_peak: need at least 3 samples");

    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        bool is_max = true;
        for (long d = -2; d <= 2 && is_max; ++d) {
            const long j = static_cast<long>(i) + d;
            if (d == 0 || j < 0 || j >= static_cast<long>(v.size())) continue;
            is_max = v[i].p > v[static_cast<std::size_t>(j)].p;
        }
        if (is_max) return {v[i].x, v[i].p, true};
    }

    // No interior local maximum: report the global maximum, earliest on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].p > v[best].p) best = i;
    return {v[best].x, v[best].p, false};
}

PeakResult first_peak_smoothed(const ProbabilitySeries& s) {
    PeakResult peak = first_peak(s);
    if (s.abscissa != Abscissa::Step) return peak;
    const auto& v = s.samples;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i].x == peak.x) {
            peak.p = (v[i - 1].p + 2.0 * v[i].p + v[i + 1].p) / 4.0;
            break;
        }
    }
    return peak;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::SubThreshold: return "sub-threshold";
        case Regime::Critical: return "critical";
        case Regime::SuperThreshold: return "super-threshold";
        case Regime::Constant: return "constant";
    }
    return "unknown";
}

void ScalingFamily::validate() const {
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
        throw std::invalid_argument("ScalingFamily: amplitude must be nonnegative");
    if (!std::isfinite(exponent) || exponent > 0.0)
        throw std::invalid_argument("ScalingFamily: exponent must be nonpositive");
    if (amplitude == 0.0 && exponent != 0.0)
        throw std::invalid_argument("ScalingFamily: zero amplitude requires zero exponent");
}

double ScalingFamily::value_at(std::size_t n) const {
    return amplitude * std::pow(static_cast<double>(n), exponent);
}

Regime classify_family(const ScalingFamily& f) {
    f.validate();
    if (f.amplitude == 0.0) return Regime::SubThreshold;  // barrier-free
    if (f.exponent < -0.5) return Regime::SubThreshold;
    if (f.exponent == -0.5) return Regime::Critical;
    if (f.exponent < 0.0) return Regime::SuperThreshold;
    return Regime::Constant;
}

namespace {

bool prediction_applies(Regime r) {
    return r == Regime::SubThreshold || r == Regime::Critical;
}

std::vector<std::size_t> sorted_sizes(std::vector<std::size_t> sizes) {
    if (sizes.empty()) throw std::invalid_argument("sweep: size list is empty");
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

std::vector<SweepRow> sweep_discrete(const ScalingFamily& f,
                                     const std::vector<std::size_t>& sizes,
                                     const DiscreteSweepOptions& opts) {
    const Regime regime = classify_family(f);
    std::vector<SweepRow> rows;
    for (std::size_t n : sorted_sizes(sizes)) {
        DiscreteParams p{n, f.value_at(n), 0};
        p.validate();

        const double root_n = std::sqrt(static_cast<double>(n));
        std::size_t steps = opts.steps_override;
        if (steps == 0)
            steps = static_cast<std::size_t>(std::ceil(3.0 * kPi * root_n / (2.0 * std::sqrt(2.0))));

        const auto series = simulate_reduced(p, steps);
        const auto peak = first_peak_smoothed(series);

        SweepRow row;
        row.n = n;
        row.barrier = p.phi;
        row.c = p.barrier_coefficient();
        row.peak_x = peak.x;
        row.peak_p = peak.p;
        row.peak_is_interior = peak.is_interior;
        row.predicted_t = predicted_runtime(p);
        row.predicted_p = predicted_peak_probability(p);
        row.regime = regime;
        row.prediction_applicable = prediction_applies(regime);
        row.is_discrete = true;
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> sweep_continuous(const ScalingFamily& f,
                                       const std::vector<std::size_t>& sizes,
                                       const ContinuousSweepOptions& opts) {
    const Regime regime = classify_family(f);
    std::vector<SweepRow> rows;
    for (std::size_t n : sorted_sizes(sizes)) {
        const double eps = f.value_at(n);
        ContinuousParams p;
        p.n = n;
        p.epsilon = eps;
        p.gamma_n = 1.0;
        if (opts.policy == GammaPolicy::Compensated) p.gamma_n = 1.0 / (1.0 - eps);
        const double root_n = std::sqrt(static_cast<double>(n));
        p.t_max = opts.t_max_override > 0.0 ? opts.t_max_override : 3.0 * kPi * root_n / 2.0;
        p.dt = opts.dt_override > 0.0 ? opts.dt_override : p.t_max / 3000.0;
        p.validate();

        const auto series = success_series_c(p);
        const auto peak = first_peak(series);

        SweepRow row;
        row.n = n;
        row.barrier = eps;
        row.c = eps * root_n;
        row.peak_x = peak.x;
        row.peak_p = peak.p;
        row.peak_is_interior = peak.is_interior;
        row.predicted_t = predicted_runtime_c(p);
        row.predicted_p = predicted_peak_probability_c(p);
        row.regime = regime;
        row.prediction_applicable =
            prediction_applies(regime) || opts.policy == GammaPolicy::Compensated;
        row.is_discrete = false;
        rows.push_back(row);
    }
    return rows;
}

PredictionReport verify_predictions(const std::vector<SweepRow>& rows, double tol_p,
                                    double tol_t_rel) {
    if (rows.empty()) throw std::invalid_argument("verify_predictions: no rows");

    PredictionReport report;
    for (const auto& row : rows) {
        RowCheck check;
        check.row = row;
        check.exempt = !row.prediction_applicable;
        check.dev_p = std::abs(row.peak_p - row.predicted_p);
        check.dev_t_rel = std::abs(row.peak_x - row.predicted_t) / row.predicted_t;
        if (!check.exempt) {
            const double t_slack = row.is_discrete ? 1.0 : 0.0;
            const bool pass_p = check.dev_p <= tol_p;
            const bool pass_t =
                std::abs(row.peak_x - row.predicted_t) <= tol_t_rel * row.predicted_t + t_slack;
            check.pass = pass_p && pass_t;
            report.all_pass = report.all_pass && check.pass;
            report.worst_dev_p = std::max(report.worst_dev_p, check.dev_p);
            report.worst_dev_t_rel = std::max(report.worst_dev_t_rel, check.dev_t_rel);
        }
        report.rows.push_back(check);
    }
    return report;
}

}  // namespace qws
