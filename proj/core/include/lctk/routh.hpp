#pragma once

// Routh-Hurwitz stability test over exact rationals. Zero pivots are handled
// symbolically: entries live in the field of rational functions of an
// infinitesimal eps > 0, so first-column signs are one-sided limits rather
// than literal small numbers. All-zero rows use the auxiliary-polynomial
// derivative rule.

#include "lctk/binding.hpp"
#include "lctk/spoly.hpp"

namespace lctk {

enum class StabilityVerdict { Stable, Marginal, Unstable };

struct RouthResult {
    StabilityVerdict verdict;
    int sign_changes;     // equals the right-half-plane root count when no
                          // degenerate rows occurred
    bool used_epsilon;    // a lone zero pivot was perturbed
    bool used_auxiliary;  // an all-zero row was rebuilt from the auxiliary
                          // polynomial (imaginary-axis root pattern)
};

RouthResult routh_stability(const SPoly& den, const Binding& binding = {});

const char* stability_verdict_name(StabilityVerdict v) noexcept;

}  // namespace lctk
