#include "lctk/param_poly.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace lctk {

Monomial Monomial::var(const std::string& name, unsigned exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(name, exponent);
    }
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [name, exp] : factors_) d += exp;
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& rhs) const {
    Monomial out;
    auto a = factors_.begin();
    for (const auto& [name, exp] : rhs.factors_) {
        while (a != factors_.end() && a->first < name) out.factors_.push_back(*a++);
        if (a == factors_.end() || a->first != name || a->second < exp) return std::nullopt;
        if (a->second > exp) out.factors_.emplace_back(a->first, a->second - exp);
        ++a;
    }
    while (a != factors_.end()) out.factors_.push_back(*a++);
    return out;
}

bool Monomial::grlex_less(const Monomial& rhs) const {
    unsigned da = total_degree();
    unsigned db = rhs.total_degree();
    if (da != db) return da < db;
    // lexicographic walk over the union of names (sorted); a higher exponent
    // on an earlier name ranks higher
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() && b != rhs.factors_.end()) {
        if (a->first != b->first) {
            // the side owning the earlier name has positive exponent there
            return a->first > b->first;  // rhs has the earlier name => *this is less
        }
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return a == factors_.end() && b != rhs.factors_.end();
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, exp] : factors_) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

ParamPoly::ParamPoly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.emplace(Monomial::unit(), c);
    }
}

ParamPoly ParamPoly::var(const std::string& name) {
    return term(Rational(1), Monomial::var(name));
}

ParamPoly ParamPoly::term(const Rational& coef, const Monomial& mono) {
    ParamPoly p;
    if (!coef.is_zero()) {
        p.terms_.emplace(mono, coef);
    }
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) {
        throw InvalidArgument("constant_value on non-constant polynomial " + to_string());
    }
    return terms_.begin()->second;
}

bool ParamPoly::is_one() const { return is_constant() && constant_value().is_one(); }

unsigned ParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [mono, coef] : terms_) d = std::max(d, mono.total_degree());
    return d;
}

void ParamPoly::insert_term(const Monomial& mono, const Rational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono, -coef);
    return out;
}

ParamPoly ParamPoly::operator+(const ParamPoly& rhs) const {
    ParamPoly out = *this;
    for (const auto& [mono, coef] : rhs.terms_) out.insert_term(mono, coef);
    return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& rhs) const {
    ParamPoly out = *this;
    for (const auto& [mono, coef] : rhs.terms_) out.insert_term(mono, -coef);
    return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& rhs) const {
    ParamPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.insert_term(ma * mb, ca * cb);
        }
    }
    return out;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
    ParamPoly out;
    if (c.is_zero()) return out;
    for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono, coef * c);
    return out;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& rhs) const {
    if (rhs.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    ParamPoly quotient;
    ParamPoly remainder = *this;
    const auto& lead_d = *rhs.terms_.rbegin();  // grlex-largest term of divisor
    while (!remainder.is_zero()) {
        const auto& lead_r = *remainder.terms_.rbegin();
        auto mono_q = lead_r.first.divide(lead_d.first);
        if (!mono_q) {
            throw InvalidArgument("inexact polynomial division: " + to_string() + " by " +
                                  rhs.to_string());
        }
        ParamPoly t = ParamPoly::term(lead_r.second / lead_d.second, *mono_q);
        quotient += t;
        remainder -= t * rhs;
    }
    return quotient;
}

void ParamPoly::collect_params(std::set<std::string>& out) const {
    for (const auto& [mono, coef] : terms_) {
        for (const auto& [name, exp] : mono.factors()) out.insert(name);
    }
}

std::set<std::string> ParamPoly::free_params() const {
    std::set<std::string> out;
    collect_params(out);
    return out;
}

double ParamPoly::eval(const std::map<std::string, double>& values) const {
    double acc = 0.0;
    for (const auto& [mono, coef] : terms_) {
        double t = coef.to_double();
        for (const auto& [name, exp] : mono.factors()) {
            auto it = values.find(name);
            if (it == values.end()) {
                throw UnboundParameter("parameter '" + name + "' is not bound");
            }
            t *= std::pow(it->second, static_cast<double>(exp));
        }
        acc += t;
    }
    return acc;
}

Rational ParamPoly::eval_exact(const std::map<std::string, Rational>& values) const {
    Rational acc(0);
    for (const auto& [mono, coef] : terms_) {
        Rational t = coef;
        for (const auto& [name, exp] : mono.factors()) {
            auto it = values.find(name);
            if (it == values.end()) {
                throw UnboundParameter("parameter '" + name + "' is not bound");
            }
            t *= it->second.pow(exp);
        }
        acc += t;
    }
    return acc;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex-descending for readable leading terms
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coef] = *it;
        Rational c = coef;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        first = false;
        if (mono.is_unit()) {
            os << c.to_string();
        } else if (c.is_one()) {
            os << mono.to_string();
        } else {
            os << c.to_string() << "*" << mono.to_string();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

}  // namespace lctk
