#pragma once

// Rational transfer functions in s with exact symbolic coefficients and an
// optional pure-delay factor e^{-delay*s}. No automatic gcd cancellation is
// performed anywhere; equality is by cross-multiplication.

#include <complex>

#include "lctk/spoly.hpp"

namespace lctk {

class TransferFunction {
public:
    /// Defaults to 0/1.
    TransferFunction() : num_(), den_(SPoly(1)) {}
    TransferFunction(SPoly num, SPoly den, double delay = 0.0);

    static TransferFunction constant(const Rational& c) {
        return {SPoly(ParamPoly(c)), SPoly(1)};
    }
    static TransferFunction one() { return constant(Rational(1)); }
    static TransferFunction zero() { return {}; }

    [[nodiscard]] const SPoly& num() const { return num_; }
    [[nodiscard]] const SPoly& den() const { return den_; }
    [[nodiscard]] double delay() const { return delay_; }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_delay_free() const { return delay_ == 0.0; }

    void collect_params(std::set<std::string>& out) const;
    [[nodiscard]] std::set<std::string> free_params() const;

    /// Divide num and den by the rational content of the denominator and make
    /// its leading sign positive. Only available when every coefficient is
    /// numeric; symbolic inputs are returned unchanged.
    [[nodiscard]] TransferFunction with_content_removed() const;

    [[nodiscard]] std::string to_string() const;

private:
    SPoly num_;
    SPoly den_;
    double delay_ = 0.0;
};

enum class TfOp { Add, Sub, Mul, Div, Neg };

/// Exact arithmetic on s-polynomials.
enum class SpolyOp { Add, Sub, Mul };
SPoly spoly_arith(SpolyOp op, const SPoly& a, const SPoly& b);

/// Block-diagram composition. Add requires equal delays; Mul adds delays;
/// Div subtracts them and must stay nonnegative.
TransferFunction tf_arith(TfOp op, const TransferFunction& a, const TransferFunction& b);
TransferFunction tf_neg(const TransferFunction& a);

/// a == b iff delays match and a.num*b.den = b.num*a.den as exact identities.
bool tf_equal(const TransferFunction& a, const TransferFunction& b);

/// e^{-delay*s} * num(s)/den(s) in double-precision complex arithmetic.
std::complex<double> tf_eval(const TransferFunction& tf, const Binding& binding,
                             std::complex<double> s);

/// Closed loop G/(1 + GH); operands must be delay-free.
TransferFunction tf_feedback(const TransferFunction& g, const TransferFunction& h);

std::ostream& operator<<(std::ostream& os, const TransferFunction& tf);

}  // namespace lctk
