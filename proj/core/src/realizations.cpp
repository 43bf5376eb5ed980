#include "lctk/realizations.hpp"

#include "lctk/errors.hpp"

namespace lctk {

namespace {

ParamPoly pick(const std::map<std::string, ParamPoly>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) {
        return ParamPoly::var(name);
    }
    const ParamPoly& v = it->second;
    if (v.is_zero() || (v.is_constant() && v.constant_value().sign() <= 0)) {
        throw NonPositiveComponent("component value " + name + " must be positive");
    }
    return v;
}

Component resistor(const std::string& name, const std::string& n1, const std::string& n2,
                   const ParamPoly& value) {
    return {Component::Kind::Resistor, name, {n1, n2}, value};
}

Component capacitor(const std::string& name, const std::string& n1, const std::string& n2,
                    const ParamPoly& value) {
    return {Component::Kind::Capacitor, name, {n1, n2}, value};
}

Component opamp(const std::string& name, const std::string& plus, const std::string& minus,
                const std::string& out) {
    return {Component::Kind::OpAmp, name, {plus, minus, out}, ParamPoly()};
}

}  // namespace

Netlist realize_controller(ControllerKind kind, const std::map<std::string, ParamPoly>& params) {
    std::vector<Component> c;
    switch (kind) {
        case ControllerKind::P:
            c.push_back(resistor("R1", "in", "a", pick(params, "R1")));
            c.push_back(resistor("R2", "a", "out", pick(params, "R2")));
            break;
        case ControllerKind::I:
            c.push_back(resistor("R1", "in", "a", pick(params, "R1")));
            c.push_back(capacitor("C2", "a", "out", pick(params, "C2")));
            break;
        case ControllerKind::D:
            c.push_back(capacitor("C1", "in", "a", pick(params, "C1")));
            c.push_back(resistor("R2", "a", "out", pick(params, "R2")));
            break;
        case ControllerKind::PI:
            c.push_back(resistor("R1", "in", "a", pick(params, "R1")));
            c.push_back(resistor("R2", "a", "b", pick(params, "R2")));
            c.push_back(capacitor("C2", "b", "out", pick(params, "C2")));
            break;
        case ControllerKind::PD:
            c.push_back(capacitor("C1", "in", "a", pick(params, "C1")));
            c.push_back(resistor("R1", "in", "a", pick(params, "R1")));
            c.push_back(resistor("R2", "a", "out", pick(params, "R2")));
            break;
        case ControllerKind::PID:
            c.push_back(capacitor("C1", "in", "a", pick(params, "C1")));
            c.push_back(resistor("R1", "in", "a", pick(params, "R1")));
            c.push_back(resistor("R2", "a", "b", pick(params, "R2")));
            c.push_back(capacitor("C2", "b", "out", pick(params, "C2")));
            break;
    }
    c.push_back(opamp("U1", "gnd", "a", "out"));
    return {std::move(c), "in", "out"};
}

Netlist realize_compensator(CompensatorKind kind, Realization realization,
                            const std::map<std::string, ParamPoly>& params) {
    std::vector<Component> c;
    if (realization == Realization::Active) {
        if (kind == CompensatorKind::LagLead) {
            throw UnsupportedCombination("lag-lead compensators have no active realization here");
        }
        // one topology for lag and lead; the parameter regime decides which
        c.push_back(resistor("R1", "in", "a", pick(params, "R1")));
        c.push_back(capacitor("C1", "in", "a", pick(params, "C1")));
        c.push_back(resistor("R2", "a", "out", pick(params, "R2")));
        c.push_back(capacitor("C2", "a", "out", pick(params, "C2")));
        c.push_back(opamp("U1", "gnd", "a", "out"));
        return {std::move(c), "in", "out"};
    }
    switch (kind) {
        case CompensatorKind::Lag:
            c.push_back(resistor("R1", "in", "out", pick(params, "R1")));
            c.push_back(resistor("R2", "out", "m", pick(params, "R2")));
            c.push_back(capacitor("C2", "m", "gnd", pick(params, "C2")));
            break;
        case CompensatorKind::Lead:
            c.push_back(resistor("R1", "in", "out", pick(params, "R1")));
            c.push_back(capacitor("C1", "in", "out", pick(params, "C1")));
            c.push_back(resistor("R2", "out", "gnd", pick(params, "R2")));
            break;
        case CompensatorKind::LagLead:
            c.push_back(resistor("R1", "in", "out", pick(params, "R1")));
            c.push_back(capacitor("C1", "in", "out", pick(params, "C1")));
            c.push_back(resistor("R2", "out", "m", pick(params, "R2")));
            c.push_back(capacitor("C2", "m", "gnd", pick(params, "C2")));
            break;
    }
    return {std::move(c), "in", "out"};
}

CompensatorClass classify_active_compensator(const Rational& r1, const Rational& c1,
                                             const Rational& r2, const Rational& c2) {
    for (const Rational* v : {&r1, &c1, &r2, &c2}) {
        if (v->sign() <= 0) {
            throw NonPositiveComponent("compensator components must be positive");
        }
    }
    Rational lhs = r2 * c2;
    Rational rhs = r1 * c1;
    if (lhs > rhs) return CompensatorClass::Lag;
    if (rhs > lhs) return CompensatorClass::Lead;
    return CompensatorClass::Unity;
}

const char* controller_kind_name(ControllerKind kind) noexcept {
    switch (kind) {
        case ControllerKind::P: return "P";
        case ControllerKind::I: return "I";
        case ControllerKind::D: return "D";
        case ControllerKind::PI: return "PI";
        case ControllerKind::PD: return "PD";
        case ControllerKind::PID: return "PID";
    }
    return "?";
}

const char* compensator_class_name(CompensatorClass cls) noexcept {
    switch (cls) {
        case CompensatorClass::Lag: return "Lag";
        case CompensatorClass::Lead: return "Lead";
        case CompensatorClass::Unity: return "Unity";
    }
    return "?";
}

}  // namespace lctk
