#pragma once

// Built-in controller and compensator realizations. Active realizations use
// the inverting op-amp structure (virtual-ground node `a`, unity-gain); the
// PID topology is C1||R1 from the input to `a`, R2 from `a` to `b`, C2 from
// `b` to the output. Passive compensators are two-port voltage dividers.

#include <map>

#include "lctk/netlist.hpp"

namespace lctk {

enum class ControllerKind { P, I, D, PI, PD, PID };
enum class CompensatorKind { Lag, Lead, LagLead };
enum class Realization { Active, Passive };
enum class CompensatorClass { Lag, Lead, Unity };

/// Component values default to symbolic parameters named R1/C1/R2/C2 as the
/// kind requires; numeric overrides must be positive.
Netlist realize_controller(ControllerKind kind,
                           const std::map<std::string, ParamPoly>& params = {});

Netlist realize_compensator(CompensatorKind kind, Realization realization,
                            const std::map<std::string, ParamPoly>& params = {});

/// Lag iff R2*C2 > R1*C1, Lead iff R1*C1 > R2*C2, Unity on equality.
CompensatorClass classify_active_compensator(const Rational& r1, const Rational& c1,
                                             const Rational& r2, const Rational& c2);

const char* controller_kind_name(ControllerKind kind) noexcept;
const char* compensator_class_name(CompensatorClass cls) noexcept;

}  // namespace lctk
