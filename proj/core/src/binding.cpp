#include "lctk/binding.hpp"

namespace lctk {

Binding Binding::exact(std::map<std::string, Rational> values) {
    Binding b;
    b.mode_ = Mode::Exact;
    b.exact_ = std::move(values);
    return b;
}

Binding Binding::approx(std::map<std::string, double> values) {
    Binding b;
    b.mode_ = Mode::Approx;
    b.approx_ = std::move(values);
    return b;
}

bool Binding::has(const std::string& name) const {
    return mode_ == Mode::Exact ? exact_.count(name) > 0 : approx_.count(name) > 0;
}

std::set<std::string> Binding::bound_names() const {
    std::set<std::string> out;
    if (mode_ == Mode::Exact) {
        for (const auto& [k, v] : exact_) out.insert(k);
    } else {
        for (const auto& [k, v] : approx_) out.insert(k);
    }
    return out;
}

double Binding::value(const std::string& name) const {
    if (mode_ == Mode::Exact) {
        auto it = exact_.find(name);
        if (it == exact_.end()) throw UnboundParameter("parameter '" + name + "' is not bound");
        return it->second.to_double();
    }
    auto it = approx_.find(name);
    if (it == approx_.end()) throw UnboundParameter("parameter '" + name + "' is not bound");
    return it->second;
}

Rational Binding::rational_value(const std::string& name) const {
    if (mode_ == Mode::Exact) {
        auto it = exact_.find(name);
        if (it == exact_.end()) throw UnboundParameter("parameter '" + name + "' is not bound");
        return it->second;
    }
    auto it = approx_.find(name);
    if (it == approx_.end()) throw UnboundParameter("parameter '" + name + "' is not bound");
    return Rational::from_double(it->second);
}

std::map<std::string, double> Binding::as_double_map() const {
    if (mode_ == Mode::Approx) return approx_;
    std::map<std::string, double> out;
    for (const auto& [k, v] : exact_) out.emplace(k, v.to_double());
    return out;
}

std::map<std::string, Rational> Binding::as_rational_map() const {
    if (mode_ == Mode::Exact) return exact_;
    std::map<std::string, Rational> out;
    for (const auto& [k, v] : approx_) out.emplace(k, Rational::from_double(v));
    return out;
}

std::set<std::string> Binding::missing(const std::set<std::string>& required) const {
    std::set<std::string> out;
    for (const auto& name : required) {
        if (!has(name)) out.insert(name);
    }
    return out;
}

}  // namespace lctk
