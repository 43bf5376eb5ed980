#pragma once

// Multivariate polynomials over named parameters (K1, R1, C2, ...) with exact
// rational coefficients. Monomials are kept in graded-lexicographic order over
// sorted parameter names so printing and hashing are deterministic.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lctk/rational.hpp"

namespace lctk {

class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return {}; }
    static Monomial var(const std::string& name, unsigned exponent = 1);

    [[nodiscard]] bool is_unit() const { return factors_.empty(); }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] const std::vector<std::pair<std::string, unsigned>>& factors() const {
        return factors_;
    }

    Monomial operator*(const Monomial& rhs) const;
    /// Exact monomial quotient, or nullopt when rhs does not divide *this.
    [[nodiscard]] std::optional<Monomial> divide(const Monomial& rhs) const;

    bool operator==(const Monomial& rhs) const { return factors_ == rhs.factors_; }

    /// Graded-lexicographic: total degree first, then lexicographic on the
    /// exponent vector over sorted names (missing name = exponent 0).
    [[nodiscard]] bool grlex_less(const Monomial& rhs) const;

    [[nodiscard]] std::string to_string() const;

private:
    // sorted by name; exponents >= 1
    std::vector<std::pair<std::string, unsigned>> factors_;
};

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.grlex_less(b); }
};

class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT: implicit constant promotion
    ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT

    static ParamPoly var(const std::string& name);
    static ParamPoly term(const Rational& coef, const Monomial& mono);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Constant value; requires is_constant().
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] bool is_one() const;

    [[nodiscard]] const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
    [[nodiscard]] unsigned total_degree() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& rhs) const;
    ParamPoly operator-(const ParamPoly& rhs) const;
    ParamPoly operator*(const ParamPoly& rhs) const;
    ParamPoly& operator+=(const ParamPoly& rhs) { return *this = *this + rhs; }
    ParamPoly& operator-=(const ParamPoly& rhs) { return *this = *this - rhs; }
    ParamPoly& operator*=(const ParamPoly& rhs) { return *this = *this * rhs; }

    ParamPoly scaled(const Rational& c) const;

    bool operator==(const ParamPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const ParamPoly& rhs) const { return !(*this == rhs); }

    /// Exact quotient; throws InvalidArgument when rhs does not divide *this.
    [[nodiscard]] ParamPoly divide_exact(const ParamPoly& rhs) const;

    void collect_params(std::set<std::string>& out) const;
    [[nodiscard]] std::set<std::string> free_params() const;

    [[nodiscard]] double eval(const std::map<std::string, double>& values) const;
    [[nodiscard]] Rational eval_exact(const std::map<std::string, Rational>& values) const;

    [[nodiscard]] std::string to_string() const;

private:
    void insert_term(const Monomial& mono, const Rational& coef);
    std::map<Monomial, Rational, GrlexLess> terms_;  // no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace lctk
