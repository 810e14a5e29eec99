// params.hpp
// Parameter records for the two walk families on the complete graph.

#pragma once

#include <cmath>
#include <cstddef>

namespace qws {

// Coined walk with hop-failure angle phi: the shift succeeds with amplitude
// cos(phi) and fails (particle stays put) with amplitude i sin(phi).
struct DiscreteParams {
    std::size_t n = 0;       // vertex count, >= 3
    double phi = 0.0;        // failure angle, in [0, pi/2)
    std::size_t marked = 0;  // marked vertex index, < n

    void validate() const;  // throws std::invalid_argument on violation

    std::size_t coin_dim() const { return n - 1; }
    double hop_amplitude() const { return std::cos(phi); }       // alpha
    double stay_magnitude() const { return std::sin(phi); }      // |beta|, beta = i sin(phi)
    double barrier_coefficient() const {                         // c = phi * sqrt(N)
        return phi * std::sqrt(static_cast<double>(n));
    }
};

// Vertex-space walk with jumping rate gamma (given as the product gamma*N)
// and per-edge hop attenuation epsilon.
struct ContinuousParams {
    std::size_t n = 0;       // vertex count, >= 2
    double gamma_n = 1.0;    // gamma * N, > 0
    double epsilon = 0.0;    // barrier strength, in [0, 1)
    std::size_t marked = 0;  // marked vertex index, < n
    double t_max = 0.0;      // sampling horizon, >= 0
    double dt = 0.1;         // sample interval, > 0

    void validate() const;

    double gamma() const { return gamma_n / static_cast<double>(n); }
    double effective_gamma() const { return gamma() * (1.0 - epsilon); }  // gamma' = gamma(1-eps)
};

}  // namespace qws
