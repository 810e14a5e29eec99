#include "qws/io.hpp"

#include <charconv>
#include <cmath>

namespace qws {

namespace {

using nlohmann::json;

const char* abscissa_header(Abscissa a) { return a == Abscissa::Step ? "step" : "t"; }

void append_complex_columns(json& record, const std::string& prefix, Complex z) {
    record[prefix + "_re"] = z.real();
    record[prefix + "_im"] = z.imag();
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

json params_to_json(const DiscreteParams& p) {
    return {{"walk", "discrete"}, {"n", p.n}, {"phi", p.phi}, {"marked", p.marked}};
}

json params_to_json(const ContinuousParams& p) {
    return {{"walk", "continuous"}, {"n", p.n},         {"gamma_n", p.gamma_n},
            {"epsilon", p.epsilon}, {"marked", p.marked}, {"t_max", p.t_max},
            {"dt", p.dt}};
}

void write_series_csv(std::ostream& os, const ProbabilitySeries& s) {
    os << abscissa_header(s.abscissa) << ",probability\n";
    for (const auto& sample : s.samples)
        os << format_double(sample.x) << "," << format_double(sample.p) << "\n";
}

json series_to_json(const ProbabilitySeries& s) {
    json records = json::array();
    const char* key = abscissa_header(s.abscissa);
    for (const auto& sample : s.samples)
        records.push_back({{key, sample.x}, {"probability", sample.p}});
    json params = std::visit([](const auto& p) { return params_to_json(p); }, s.params);
    return {{"params", std::move(params)}, {"records", std::move(records)}};
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "N,phi,c,peak_x,peak_p,predicted_t,predicted_p,regime\n";
    for (const auto& row : rows) {
        os << row.n << "," << format_double(row.barrier) << "," << format_double(row.c) << ","
           << format_double(row.peak_x) << "," << format_double(row.peak_p) << ","
           << format_double(row.predicted_t) << "," << format_double(row.predicted_p) << ","
           << regime_name(row.regime) << "\n";
    }
}

json sweep_to_json(const std::vector<SweepRow>& rows, const json& params) {
    json records = json::array();
    for (const auto& row : rows) {
        records.push_back({{"N", row.n},
                           {"phi", row.barrier},
                           {"c", row.c},
                           {"peak_x", row.peak_x},
                           {"peak_p", row.peak_p},
                           {"predicted_t", row.predicted_t},
                           {"predicted_p", row.predicted_p},
                           {"regime", regime_name(row.regime)}});
    }
    return {{"params", params}, {"records", std::move(records)}};
}

namespace {

json discrete_spectrum_record(const DiscreteParams& p, const SpectrumD& s) {
    json record;
    record["n"] = p.n;
    record["phi"] = p.phi;
    record["theta"] = s.theta;
    record["sigma"] = s.sigma;
    record["predicted_t"] = predicted_runtime(p);
    record["predicted_p"] = predicted_peak_probability(p);
    const std::array<const char*, 3> names{"spectator", "rot_plus", "rot_minus"};
    const auto basis = s.basis();
    for (std::size_t k = 0; k < 3; ++k) {
        append_complex_columns(record, std::string(names[k]) + "_value", basis[k].value);
        for (std::size_t i = 0; i < 3; ++i)
            append_complex_columns(record, std::string(names[k]) + "_vec" + std::to_string(i),
                                   basis[k].vector[i]);
    }
    return record;
}

json continuous_spectrum_record(const ContinuousParams& p, const SpectrumC& s) {
    json record;
    record["n"] = p.n;
    record["gamma_n"] = p.gamma_n;
    record["epsilon"] = p.epsilon;
    record["e0"] = s.e0;
    record["e1"] = s.e1;
    record["gap"] = s.gap;
    record["predicted_t"] = predicted_runtime_c(p);
    record["predicted_p"] = predicted_peak_probability_c(p);
    append_complex_columns(record, "ground_a", s.ground.amp_a);
    append_complex_columns(record, "ground_b", s.ground.amp_b);
    append_complex_columns(record, "excited_a", s.excited.amp_a);
    append_complex_columns(record, "excited_b", s.excited.amp_b);
    return record;
}

// One header line and one row, columns in the record's (sorted) key order.
void write_record_csv(std::ostream& os, const json& record) {
    bool first = true;
    for (auto it = record.begin(); it != record.end(); ++it) {
        os << (first ? "" : ",") << it.key();
        first = false;
    }
    os << "\n";
    first = true;
    for (auto it = record.begin(); it != record.end(); ++it) {
        os << (first ? "" : ",");
        first = false;
        if (it->is_number_float())
            os << format_double(it->get<double>());
        else
            os << *it;
    }
    os << "\n";
}

}  // namespace

void write_discrete_spectrum_csv(std::ostream& os, const DiscreteParams& p, const SpectrumD& s) {
    write_record_csv(os, discrete_spectrum_record(p, s));
}

json discrete_spectrum_to_json(const DiscreteParams& p, const SpectrumD& s) {
    return {{"params", params_to_json(p)}, {"records", json::array({discrete_spectrum_record(p, s)})}};
}

void write_continuous_spectrum_csv(std::ostream& os, const ContinuousParams& p,
                                   const SpectrumC& s) {
    write_record_csv(os, continuous_spectrum_record(p, s));
}

json continuous_spectrum_to_json(const ContinuousParams& p, const SpectrumC& s) {
    return {{"params", params_to_json(p)},
            {"records", json::array({continuous_spectrum_record(p, s)})}};
}

}  // namespace qws
