// series.hpp
// Sampled success probability curves produced by the simulators.

#pragma once

#include <variant>
#include <vector>

#include "qws/params.hpp"

namespace qws {

enum class Abscissa { Step, Time };

struct Sample {
    double x = 0.0;  // step count or time
    double p = 0.0;  // success probability, in [0, 1 + 1e-9]
};

struct ProbabilitySeries {
    Abscissa abscissa = Abscissa::Step;
    std::vector<Sample> samples;  // strictly increasing in x
    std::variant<DiscreteParams, ContinuousParams> params;
};

}  // namespace qws
