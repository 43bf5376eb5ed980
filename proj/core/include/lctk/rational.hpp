#pragma once

// Exact rational arithmetic. Values are always reduced to lowest terms with
// a positive denominator; decimal literals such as 0.1088 convert exactly
// (1088/10000 reduced to 68/625). Doubles enter the picture only at the
// evaluation boundary via to_double()/from_double().

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lctk/errors.hpp"

namespace lctk {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}            // NOLINT: implicit by design
    Rational(long long n) : value_(n) {}      // NOLINT
    explicit Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    /// Exact conversion of a decimal/scientific/fraction literal:
    /// "3", "-0.25", "1e-6", "2.5e3", "7/20".
    static Rational parse(std::string_view text);

    /// Exact conversion of a finite double (mantissa * 2^exp).
    static Rational from_double(double x);

    [[nodiscard]] BigInt numerator() const;
    [[nodiscard]] BigInt denominator() const;

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;

    [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }
    [[nodiscard]] std::string to_string() const;

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const Rational& rhs) const { return value_ != rhs.value_; }
    bool operator<(const Rational& rhs) const { return value_ < rhs.value_; }
    bool operator<=(const Rational& rhs) const { return value_ <= rhs.value_; }
    bool operator>(const Rational& rhs) const { return value_ > rhs.value_; }
    bool operator>=(const Rational& rhs) const { return value_ >= rhs.value_; }

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Rational pow(unsigned e) const;

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}
    Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer rational.
Rational factorial(unsigned n);

/// Binomial coefficient C(n, k), exact.
Rational binomial(unsigned n, unsigned k);

}  // namespace lctk
