#include "lctk/spoly.hpp"

#include <ostream>
#include <sstream>

namespace lctk {

SPoly::SPoly(const ParamPoly& constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

SPoly::SPoly(std::vector<ParamPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

SPoly SPoly::s_power(unsigned k, const ParamPoly& c) {
    SPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(k + 1, ParamPoly());
    p.coeffs_[k] = c;
    return p;
}

void SPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ParamPoly& SPoly::coeff(size_t k) const {
    static const ParamPoly zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

const ParamPoly& SPoly::leading_coeff() const {
    static const ParamPoly zero;
    return coeffs_.empty() ? zero : coeffs_.back();
}

bool SPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

SPoly SPoly::operator-() const {
    SPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

SPoly SPoly::operator+(const SPoly& rhs) const {
    SPoly out;
    out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t k = 0; k < out.coeffs_.size(); ++k) {
        out.coeffs_[k] = coeff(k) + rhs.coeff(k);
    }
    out.trim();
    return out;
}

SPoly SPoly::operator-(const SPoly& rhs) const { return *this + (-rhs); }

SPoly SPoly::operator*(const SPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    SPoly out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, ParamPoly());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

SPoly SPoly::scaled(const Rational& c) const {
    SPoly out;
    if (c.is_zero()) return out;
    out.coeffs_ = coeffs_;
    for (auto& p : out.coeffs_) p = p.scaled(c);
    return out;
}

SPoly SPoly::scaled(const ParamPoly& c) const {
    SPoly out;
    if (c.is_zero()) return out;
    out.coeffs_ = coeffs_;
    for (auto& p : out.coeffs_) p = p * c;
    out.trim();
    return out;
}

SPoly SPoly::divide_exact(const SPoly& rhs) const {
    if (rhs.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    SPoly remainder = *this;
    if (remainder.is_zero()) return {};
    if (remainder.degree() < rhs.degree()) {
        throw InvalidArgument("inexact s-polynomial division (degree)");
    }
    std::vector<ParamPoly> q(remainder.degree() - rhs.degree() + 1, ParamPoly());
    while (!remainder.is_zero() && remainder.degree() >= rhs.degree()) {
        size_t shift = remainder.degree() - rhs.degree();
        ParamPoly factor = remainder.leading_coeff().divide_exact(rhs.leading_coeff());
        q[shift] = factor;
        remainder -= (rhs * SPoly::s_power(static_cast<unsigned>(shift), factor));
    }
    if (!remainder.is_zero()) {
        throw InvalidArgument("inexact s-polynomial division (remainder)");
    }
    return SPoly(std::move(q));
}

SPoly SPoly::substitute_scaled_s(const Rational& c) const {
    if (c.is_zero()) {
        throw InvalidArgument("substitute_scaled_s with zero scale");
    }
    SPoly out;
    out.coeffs_ = coeffs_;
    Rational ck(1);
    for (size_t k = 0; k < out.coeffs_.size(); ++k) {
        out.coeffs_[k] = out.coeffs_[k].scaled(ck);
        ck *= c;
    }
    out.trim();
    return out;
}

SPoly SPoly::substitute_shifted_s(const Rational& a) const {
    // P(s + a) via binomial expansion of each power
    SPoly out;
    if (is_zero()) return out;
    out.coeffs_.assign(coeffs_.size(), ParamPoly());
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        for (size_t m = k + 1; m-- > 0;) {
            // coefficient of s^m in (s+a)^k is C(k,m) a^(k-m)
            Rational c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(m)) *
                         a.pow(static_cast<unsigned>(k - m));
            out.coeffs_[m] += coeffs_[k].scaled(c);
        }
    }
    out.trim();
    return out;
}

std::pair<SPoly, SPoly> SPoly::split_complex_shift(const Rational& b) const {
    // P(s + j b) = A(s) + j B(s): expand (s + j b)^k binomially; j^r cycles
    // through {1, j, -1, -j}.
    std::vector<ParamPoly> re(coeffs_.size(), ParamPoly());
    std::vector<ParamPoly> im(coeffs_.size(), ParamPoly());
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        for (size_t m = 0; m <= k; ++m) {
            unsigned r = static_cast<unsigned>(k - m);
            Rational c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(m)) * b.pow(r);
            switch (r % 4) {
                case 0: re[m] += coeffs_[k].scaled(c); break;
                case 1: im[m] += coeffs_[k].scaled(c); break;
                case 2: re[m] -= coeffs_[k].scaled(c); break;
                case 3: im[m] -= coeffs_[k].scaled(c); break;
            }
        }
    }
    return {SPoly(std::move(re)), SPoly(std::move(im))};
}

void SPoly::collect_params(std::set<std::string>& out) const {
    for (const auto& c : coeffs_) c.collect_params(out);
}

std::set<std::string> SPoly::free_params() const {
    std::set<std::string> out;
    collect_params(out);
    return out;
}

std::vector<double> SPoly::bind(const Binding& binding) const {
    auto values = binding.as_double_map();
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(values));
    return out;
}

std::vector<Rational> SPoly::bind_exact(const Binding& binding) const {
    auto values = binding.as_rational_map();
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval_exact(values));
    return out;
}

std::complex<double> SPoly::eval(const Binding& binding, std::complex<double> s) const {
    return eval_poly(bind(binding), s);
}

std::complex<double> eval_poly(const std::vector<double>& coeffs, std::complex<double> s) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * s + coeffs[k];
    }
    return acc;
}

std::string SPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const ParamPoly& c = coeffs_[k];
        if (c.is_zero()) continue;

        // one printable chunk per s-power
        bool negate = false;
        std::string chunk;
        size_t nterms = c.terms().size();
        if (nterms == 1) {
            const auto& [mono, coef] = *c.terms().begin();
            Rational cc = coef;
            if (cc.sign() < 0) {
                negate = true;
                cc = -cc;
            }
            std::ostringstream t;
            bool printed = false;
            if (!cc.is_one() || (mono.is_unit() && k == 0)) {
                t << cc.to_string();
                printed = true;
            }
            if (!mono.is_unit()) {
                if (printed) t << "*";
                t << mono.to_string();
                printed = true;
            }
            if (k >= 1) {
                if (printed) t << "*";
                t << "s";
                if (k > 1) t << "^" << k;
            } else if (!printed) {
                t << cc.to_string();
            }
            chunk = t.str();
        } else {
            std::ostringstream t;
            if (k >= 1) {
                t << "(" << c.to_string() << ")*s";
                if (k > 1) t << "^" << k;
            } else if (first) {
                t << c.to_string();
            } else {
                // keep a mid-sum multi-term constant unambiguous
                t << "(" << c.to_string() << ")";
            }
            chunk = t.str();
        }

        if (first) {
            if (negate) os << "-";
        } else {
            os << (negate ? " - " : " + ");
        }
        first = false;
        os << chunk;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SPoly& p) { return os << p.to_string(); }

}  // namespace lctk
