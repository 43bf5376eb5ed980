#pragma once

// Parameter bindings for numeric evaluation. Exact mode carries rationals
// only; approximate mode carries doubles (every double is itself an exact
// binary rational, so exact readback is always possible).

#include <map>
#include <set>
#include <string>

#include "lctk/rational.hpp"

namespace lctk {

class Binding {
public:
    enum class Mode { Exact, Approx };

    Binding() : mode_(Mode::Exact) {}

    static Binding exact(std::map<std::string, Rational> values);
    static Binding approx(std::map<std::string, double> values);

    [[nodiscard]] Mode mode() const { return mode_; }
    [[nodiscard]] bool has(const std::string& name) const;
    [[nodiscard]] std::set<std::string> bound_names() const;

    [[nodiscard]] double value(const std::string& name) const;
    [[nodiscard]] Rational rational_value(const std::string& name) const;

    [[nodiscard]] std::map<std::string, double> as_double_map() const;
    [[nodiscard]] std::map<std::string, Rational> as_rational_map() const;

    /// Names in `required` that this binding does not cover.
    [[nodiscard]] std::set<std::string> missing(const std::set<std::string>& required) const;

private:
    Mode mode_;
    std::map<std::string, Rational> exact_;
    std::map<std::string, double> approx_;
};

}  // namespace lctk
