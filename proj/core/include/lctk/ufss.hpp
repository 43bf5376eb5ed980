#pragma once

// Pitch-control case study of an unmanned free-swimming submersible: the
// fourth-order pitch ODE with pitch gain K1 and pitch rate sensor gain K2,
// and its exact transfer function.

#include "lctk/lti.hpp"

namespace lctk {

struct UfssParams {
    ParamPoly k1 = ParamPoly::var("K1");
    ParamPoly k2 = ParamPoly::var("K2");

    static UfssParams symbolic() { return {}; }
    static UfssParams numeric(const Rational& k1, const Rational& k2) {
        return {ParamPoly(k1), ParamPoly(k2)};
    }
};

/// alpha = [0.1088 K1 + 0.0416, 0.25 K1 + 0.1088 K2 + 0.6106,
///          0.25 K2 + 3.207, 3.456, 1], beta = [0.1088 K1, 0.25 K1],
/// all exact rationals.
OdeSystem ufss_pitch_ode(const UfssParams& p = {});

/// Hand-built closed-form pitch transfer function; tf_equal to
/// transfer_function(ufss_pitch_ode(p)) by construction.
TransferFunction ufss_pitch_tf(const UfssParams& p = {});

}  // namespace lctk
