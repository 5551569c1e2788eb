#pragma once

#include <stdexcept>
#include <string>

namespace teich {

// Adaptive quadrature exceeded its panel budget; the integrand is likely
// non-integrable or pathological on the requested interval.
class PanelLimitExceeded : public std::runtime_error {
public:
    explicit PanelLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A ray-following evaluation failed to stabilize before t reached T_max.
class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A measurable decomposition is malformed (overlapping arcs, wrong total
// measure, or mismatched bound list).
class InvalidDecomposition : public std::invalid_argument {
public:
    explicit InvalidDecomposition(const std::string& what) : std::invalid_argument(what) {}
};

// A caller-certified limsup bound was contradicted by the ray spot-check.
class BoundViolated : public std::runtime_error {
public:
    explicit BoundViolated(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace teich
