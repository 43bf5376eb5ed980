#pragma once

// Polynomials in the Laplace variable s whose coefficients are exact
// multivariate parameter polynomials. coeffs()[k] is the coefficient of s^k;
// trailing identically-zero coefficients are trimmed, the zero polynomial is
// the empty list.

#include <complex>
#include <set>
#include <string>
#include <vector>

#include "lctk/binding.hpp"
#include "lctk/param_poly.hpp"

namespace lctk {

class SPoly {
public:
    SPoly() = default;
    SPoly(const ParamPoly& constant);  // NOLINT: implicit constant promotion
    SPoly(const Rational& constant) : SPoly(ParamPoly(constant)) {}  // NOLINT
    SPoly(int constant) : SPoly(ParamPoly(Rational(constant))) {}    // NOLINT
    explicit SPoly(std::vector<ParamPoly> coeffs);

    /// The monomial c * s^k.
    static SPoly s_power(unsigned k, const ParamPoly& c = ParamPoly(Rational(1)));
    /// The variable s itself.
    static SPoly s() { return s_power(1); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<ParamPoly>& coeffs() const { return coeffs_; }
    [[nodiscard]] const ParamPoly& coeff(size_t k) const;
    [[nodiscard]] const ParamPoly& leading_coeff() const;

    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] bool is_one() const;

    SPoly operator-() const;
    SPoly operator+(const SPoly& rhs) const;
    SPoly operator-(const SPoly& rhs) const;
    SPoly operator*(const SPoly& rhs) const;
    SPoly& operator+=(const SPoly& rhs) { return *this = *this + rhs; }
    SPoly& operator-=(const SPoly& rhs) { return *this = *this - rhs; }
    SPoly& operator*=(const SPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const SPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const SPoly& rhs) const { return !(*this == rhs); }

    SPoly scaled(const Rational& c) const;
    SPoly scaled(const ParamPoly& c) const;

    /// Exact quotient; throws InvalidArgument unless rhs divides *this.
    [[nodiscard]] SPoly divide_exact(const SPoly& rhs) const;

    /// Substitute s -> c*s (exact, c rational nonzero).
    [[nodiscard]] SPoly substitute_scaled_s(const Rational& c) const;
    /// Substitute s -> s + a (exact shift).
    [[nodiscard]] SPoly substitute_shifted_s(const Rational& a) const;
    /// Split P(s + j*b) into real and imaginary parts (real-coefficient P).
    [[nodiscard]] std::pair<SPoly, SPoly> split_complex_shift(const Rational& b) const;

    void collect_params(std::set<std::string>& out) const;
    [[nodiscard]] std::set<std::string> free_params() const;

    /// Bind all parameters; coefficient list of doubles, ascending powers.
    [[nodiscard]] std::vector<double> bind(const Binding& binding) const;
    /// Bind all parameters exactly (doubles convert exactly).
    [[nodiscard]] std::vector<Rational> bind_exact(const Binding& binding) const;

    [[nodiscard]] std::complex<double> eval(const Binding& binding,
                                            std::complex<double> s) const;

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<ParamPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const SPoly& p);

/// Horner evaluation of a bound coefficient list at complex s.
std::complex<double> eval_poly(const std::vector<double>& coeffs, std::complex<double> s);

}  // namespace lctk
