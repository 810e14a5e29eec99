// io.hpp
// Deterministic CSV/JSON emission for series, sweep tables, and spectrum
// records. All numbers are written with 17 significant digits, locale-free,
// LF line endings, so identical inputs produce byte-identical files.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qws/analysis.hpp"
#include "qws/continuous_walk.hpp"
#include "qws/discrete_walk.hpp"
#include "qws/series.hpp"

namespace qws {

// Shortest-faithful decimal for round-trip fidelity (17 significant digits).
std::string format_double(double v);

nlohmann::json params_to_json(const DiscreteParams& p);
nlohmann::json params_to_json(const ContinuousParams& p);

void write_series_csv(std::ostream& os, const ProbabilitySeries& s);
nlohmann::json series_to_json(const ProbabilitySeries& s);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, const nlohmann::json& params);

void write_discrete_spectrum_csv(std::ostream& os, const DiscreteParams& p, const SpectrumD& s);
nlohmann::json discrete_spectrum_to_json(const DiscreteParams& p, const SpectrumD& s);

void write_continuous_spectrum_csv(std::ostream& os, const ContinuousParams& p,
                                   const SpectrumC& s);
nlohmann::json continuous_spectrum_to_json(const ContinuousParams& p, const SpectrumC& s);

}  // namespace qws
