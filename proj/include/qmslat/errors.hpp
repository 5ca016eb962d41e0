// errors.hpp: exception taxonomy shared by all modules.
//
// HypothesisViolation: the requested computation is outside the certified
// parameter regime (rejected inputs, divergent series, rate above the gap).
// NumericalFailure: a solver or iteration failed to reach its tolerance.
// Plain std::invalid_argument covers structural misuse (dimension mismatches,
// supports not contained, empty inputs).
#pragma once

#include <stdexcept>
#include <string>

namespace qmslat {

struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmslat
