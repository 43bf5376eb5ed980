#include "lctk/transfer_function.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace lctk {

TransferFunction::TransferFunction(SPoly num, SPoly den, double delay)
    : num_(std::move(num)), den_(std::move(den)), delay_(delay) {
    if (den_.is_zero()) {
        throw ZeroDenominatorPoly("transfer function with zero denominator polynomial");
    }
    if (!(delay_ >= 0.0)) {
        throw NegativeDelay("transfer function delay must be >= 0");
    }
}

void TransferFunction::collect_params(std::set<std::string>& out) const {
    num_.collect_params(out);
    den_.collect_params(out);
}

std::set<std::string> TransferFunction::free_params() const {
    std::set<std::string> out;
    collect_params(out);
    return out;
}

namespace {

bool all_numeric(const SPoly& p) {
    for (const auto& c : p.coeffs()) {
        if (!c.is_constant()) return false;
    }
    return true;
}

// gcd of numerators / lcm of denominators over all coefficients
Rational rational_content(const SPoly& p) {
    BigInt g{0};
    BigInt l{1};
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        Rational r = c.constant_value();
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(r.numerator()));
        l = boost::multiprecision::lcm(l, r.denominator());
    }
    if (g.is_zero()) return Rational(1);
    return Rational{g, l};
}

}  // namespace

TransferFunction TransferFunction::with_content_removed() const {
    if (!all_numeric(num_) || !all_numeric(den_)) return *this;
    Rational c = rational_content(den_);
    if (den_.leading_coeff().constant_value().sign() < 0) c = -c;
    return {num_.scaled(c.reciprocal()), den_.scaled(c.reciprocal()), delay_};
}

SPoly spoly_arith(SpolyOp op, const SPoly& a, const SPoly& b) {
    switch (op) {
        case SpolyOp::Add: return a + b;
        case SpolyOp::Sub: return a - b;
        case SpolyOp::Mul: return a * b;
    }
    throw InvalidArgument("unknown spoly op");
}

TransferFunction tf_neg(const TransferFunction& a) {
    return {-a.num(), a.den(), a.delay()};
}

TransferFunction tf_arith(TfOp op, const TransferFunction& a, const TransferFunction& b) {
    switch (op) {
        case TfOp::Add:
        case TfOp::Sub: {
            if (a.delay() != b.delay()) {
                throw DelayMismatch("cannot add transfer functions with unequal delays");
            }
            SPoly num = op == TfOp::Add
                            ? a.num() * b.den() + b.num() * a.den()
                            : a.num() * b.den() - b.num() * a.den();
            return {std::move(num), a.den() * b.den(), a.delay()};
        }
        case TfOp::Mul:
            return {a.num() * b.num(), a.den() * b.den(), a.delay() + b.delay()};
        case TfOp::Div: {
            if (b.num().is_zero()) {
                throw DivisionByZeroTF("division by the zero transfer function");
            }
            double delay = a.delay() - b.delay();
            if (delay < 0.0) {
                throw NegativeDelay("transfer function division would produce negative delay");
            }
            return {a.num() * b.den(), a.den() * b.num(), delay};
        }
        case TfOp::Neg:
            return tf_neg(a);
    }
    throw InvalidArgument("unknown tf op");
}

bool tf_equal(const TransferFunction& a, const TransferFunction& b) {
    if (a.delay() != b.delay()) return false;
    return a.num() * b.den() == b.num() * a.den();
}

std::complex<double> tf_eval(const TransferFunction& tf, const Binding& binding,
                             std::complex<double> s) {
    auto num_coeffs = tf.num().bind(binding);
    auto den_coeffs = tf.den().bind(binding);
    std::complex<double> den = eval_poly(den_coeffs, s);

    // scale-aware pole detection: compare against the magnitude the
    // evaluation could reach with no cancellation
    double scale = 0.0;
    double smag = std::abs(s);
    double spow = 1.0;
    for (double c : den_coeffs) {
        scale += std::abs(c) * spow;
        spow *= smag;
    }
    if (std::abs(den) <= 1e-14 * scale || den == std::complex<double>(0.0, 0.0)) {
        throw PoleEvaluation("denominator vanishes at s = (" + std::to_string(s.real()) + "," +
                             std::to_string(s.imag()) + ")");
    }
    std::complex<double> value = eval_poly(num_coeffs, s) / den;
    if (tf.delay() != 0.0) {
        value *= std::exp(-tf.delay() * s);
    }
    return value;
}

TransferFunction tf_feedback(const TransferFunction& g, const TransferFunction& h) {
    if (!g.is_delay_free() || !h.is_delay_free()) {
        throw NonRationalResult("feedback of delayed transfer functions is not rational");
    }
    SPoly den = g.den() * h.den() + g.num() * h.num();
    if (den.is_zero()) {
        throw DegenerateLoop("1 + G*H vanishes identically");
    }
    return {g.num() * h.den(), std::move(den), 0.0};
}

namespace {

// a side needs no parentheses when it is a lone power of s, a bare number,
// or a bare parameter
bool atomic_side(const SPoly& p) {
    if (p.is_zero()) return true;
    size_t nterms = 0;
    for (const auto& c : p.coeffs()) nterms += c.terms().size();
    if (nterms != 1) return false;
    size_t k = p.coeffs().size() - 1;
    const auto& [mono, coef] = *p.leading_coeff().terms().begin();
    if (k >= 1) return coef.is_one() && mono.is_unit() && coef.sign() > 0;
    if (!mono.is_unit()) return coef.is_one();
    return coef.sign() > 0;
}

// numerators tolerate products; only sums (or a leading minus mid-product)
// must be wrapped
bool atomic_num(const SPoly& p) {
    size_t nterms = 0;
    for (const auto& c : p.coeffs()) nterms += c.terms().size();
    return nterms <= 1;
}

std::string format_delay(double d) {
    std::ostringstream os;
    os.precision(17);
    os << d;
    return os.str();
}

}  // namespace

std::string TransferFunction::to_string() const {
    std::ostringstream os;
    if (delay_ != 0.0) {
        os << "exp(-" << format_delay(delay_) << "*s)*";
    }
    if (atomic_num(num_)) {
        os << num_.to_string();
    } else {
        os << "(" << num_.to_string() << ")";
    }
    os << "/";
    if (atomic_side(den_)) {
        os << den_.to_string();
    } else {
        os << "(" << den_.to_string() << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TransferFunction& tf) {
    return os << tf.to_string();
}

}  // namespace lctk
