#include "lctk/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace lctk {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = Backend(num) / Backend(den);  // division reduces and fixes the sign
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_one() const { return value_ == 1; }
bool Rational::is_integer() const { return denominator() == 1; }

int Rational::sign() const {
    if (value_.is_zero()) return 0;
    return value_ < 0 ? -1 : 1;
}

Rational Rational::operator-() const { return Rational(Backend(-value_)); }
Rational Rational::operator+(const Rational& rhs) const { return Rational(Backend(value_ + rhs.value_)); }
Rational Rational::operator-(const Rational& rhs) const { return Rational(Backend(value_ - rhs.value_)); }
Rational Rational::operator*(const Rational& rhs) const { return Rational(Backend(value_ * rhs.value_)); }

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    return Rational(Backend(value_ / rhs.value_));
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DivisionByZero("reciprocal of zero");
    }
    return Rational(denominator(), numerator());
}

Rational Rational::pow(unsigned e) const {
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::string Rational::to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += "/" + denominator().str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// cpp_int treats a leading 0 as an octal prefix; decimal digit strings must
// be stripped first
BigInt decimal_bigint(std::string_view digits) {
    size_t start = digits.find_first_not_of('0');
    if (start == std::string_view::npos) return BigInt(0);
    return BigInt(std::string(digits.substr(start)));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) {
        throw SyntaxError("empty numeric literal: '" + std::string(text) + "'");
    }

    // p/q form
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) {
            throw SyntaxError("bad rational literal: '" + std::string(text) + "'");
        }
        Rational r{decimal_bigint(p), decimal_bigint(q)};
        return negative ? -r : r;
    }

    // decimal with optional exponent: digits[.digits][e[+-]digits]
    std::string_view mantissa = s;
    long long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = s.substr(0, epos);
        std::string_view exp_part = s.substr(epos + 1);
        bool exp_neg = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_neg = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            throw SyntaxError("bad exponent in numeric literal: '" + std::string(text) + "'");
        }
        exp10 = std::stoll(std::string(exp_part));
        if (exp_neg) exp10 = -exp10;
    }

    std::string digits;
    long long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if (ip.empty() && fp.empty()) {
            throw SyntaxError("bad numeric literal: '" + std::string(text) + "'");
        }
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            throw SyntaxError("bad numeric literal: '" + std::string(text) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long long>(fp.size());
    } else {
        if (!all_digits(mantissa)) {
            throw SyntaxError("bad numeric literal: '" + std::string(text) + "'");
        }
        digits = std::string(mantissa);
    }
    if (digits.empty()) digits = "0";

    BigInt num = decimal_bigint(digits);
    BigInt den{1};
    long long net_exp = exp10 - frac_digits;
    BigInt ten{10};
    if (net_exp > 0) {
        for (long long i = 0; i < net_exp; ++i) num *= ten;
    } else {
        for (long long i = 0; i < -net_exp; ++i) den *= ten;
    }
    Rational r{num, den};
    return negative ? -r : r;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) {
        throw InvalidArgument("cannot convert non-finite double to rational");
    }
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    for (int i = 0; i < 53 && mant != std::floor(mant); ++i) {
        mant *= 2.0;
        --exp;
    }
    BigInt num{static_cast<long long>(mant)};
    BigInt den{1};
    BigInt two{2};
    if (exp > 0) {
        for (int i = 0; i < exp; ++i) num *= two;
    } else {
        for (int i = 0; i < -exp; ++i) den *= two;
    }
    return Rational{num, den};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned n) {
    BigInt acc{1};
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return Rational(acc);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    if (k > n - k) k = n - k;
    BigInt acc{1};
    for (unsigned i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return Rational(acc);
}

}  // namespace lctk
