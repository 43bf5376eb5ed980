#include "lctk/routh.hpp"

#include <vector>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

// polynomial in eps, ascending coefficients, trimmed
struct EPoly {
    std::vector<Rational> c;

    static EPoly zero() { return {}; }
    static EPoly of(const Rational& r) {
        EPoly p;
        if (!r.is_zero()) p.c = {r};
        return p;
    }
    static EPoly eps() {
        EPoly p;
        p.c = {Rational(0), Rational(1)};
        return p;
    }

    [[nodiscard]] bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    EPoly operator*(const EPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return {};
        EPoly out;
        out.c.assign(c.size() + rhs.c.size() - 1, Rational(0));
        for (size_t i = 0; i < c.size(); ++i) {
            for (size_t j = 0; j < rhs.c.size(); ++j) {
                out.c[i + j] += c[i] * rhs.c[j];
            }
        }
        out.trim();
        return out;
    }

    EPoly operator-(const EPoly& rhs) const {
        EPoly out;
        out.c.assign(std::max(c.size(), rhs.c.size()), Rational(0));
        for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
        for (size_t i = 0; i < rhs.c.size(); ++i) out.c[i] -= rhs.c[i];
        out.trim();
        return out;
    }

    /// Sign of the leading behaviour as eps -> 0+ (lowest-order coefficient).
    [[nodiscard]] int sign_at_zero_plus() const {
        for (const auto& r : c) {
            if (!r.is_zero()) return r.sign();
        }
        return 0;
    }
};

// rational function of eps
struct EpsRF {
    EPoly num;
    EPoly den;  // never zero

    static EpsRF zero() { return {EPoly::zero(), EPoly::of(Rational(1))}; }
    static EpsRF of(const Rational& r) { return {EPoly::of(r), EPoly::of(Rational(1))}; }
    static EpsRF eps() { return {EPoly::eps(), EPoly::of(Rational(1))}; }

    [[nodiscard]] bool is_zero() const { return num.is_zero(); }
    [[nodiscard]] int sign() const {
        int sn = num.sign_at_zero_plus();
        int sd = den.sign_at_zero_plus();
        return sn * sd;
    }

    EpsRF operator*(const EpsRF& rhs) const { return {num * rhs.num, den * rhs.den}; }
    EpsRF operator-(const EpsRF& rhs) const {
        return {num * rhs.den - rhs.num * den, den * rhs.den};
    }
    EpsRF operator/(const EpsRF& rhs) const {
        if (rhs.is_zero()) {
            throw DivisionByZero("Routh pivot is exactly zero");
        }
        return {num * rhs.den, den * rhs.num};
    }
    EpsRF scaled(const Rational& r) const { return {num * EPoly::of(r), den}; }
};

bool all_zero(const std::vector<EpsRF>& row) {
    for (const auto& e : row) {
        if (!e.is_zero()) return false;
    }
    return true;
}

}  // namespace

RouthResult routh_stability(const SPoly& den, const Binding& binding) {
    if (den.is_zero()) {
        throw ZeroLeadingCoefficient("polynomial is identically zero");
    }
    std::vector<Rational> coeffs = den.bind_exact(binding);
    while (!coeffs.empty() && coeffs.back().is_zero()) {
        // the stored leading coefficient vanished under the binding
        throw ZeroLeadingCoefficient("leading coefficient evaluates to zero");
    }
    size_t n = coeffs.size() - 1;
    if (n == 0) {
        return {StabilityVerdict::Stable, 0, false, false};
    }

    size_t width = n / 2 + 1;
    auto entry = [&](size_t power) {
        return power <= n ? EpsRF::of(coeffs[power]) : EpsRF::zero();
    };

    std::vector<std::vector<EpsRF>> rows(n + 1, std::vector<EpsRF>(width, EpsRF::zero()));
    for (size_t j = 0; j < width; ++j) {
        if (n >= 2 * j) rows[0][j] = entry(n - 2 * j);
        if (n >= 1 + 2 * j) rows[1][j] = entry(n - 1 - 2 * j);
    }

    bool used_epsilon = false;
    bool used_auxiliary = false;

    // normalize row r (aux rule / eps pivot), then derive row r+1
    auto normalize = [&](size_t r) {
        if (all_zero(rows[r])) {
            // auxiliary polynomial A(s) = sum_j rows[r-1][j] s^{p+1-2j} with
            // p = n - r; the zero row becomes dA/ds
            used_auxiliary = true;
            size_t aux_degree = n - r + 1;
            for (size_t j = 0; j < width; ++j) {
                long long power = static_cast<long long>(aux_degree) - 2 * static_cast<long long>(j);
                if (power >= 1) {
                    rows[r][j] = rows[r - 1][j].scaled(Rational(power));
                } else {
                    rows[r][j] = EpsRF::zero();
                }
            }
        }
        if (rows[r][0].is_zero()) {
            used_epsilon = true;
            rows[r][0] = EpsRF::eps();
        }
    };

    for (size_t r = 1; r < n; ++r) {
        normalize(r);
        for (size_t j = 0; j < width; ++j) {
            EpsRF upper = j + 1 < width ? rows[r - 1][j + 1] : EpsRF::zero();
            EpsRF lower = j + 1 < width ? rows[r][j + 1] : EpsRF::zero();
            rows[r + 1][j] = (rows[r][0] * upper - rows[r - 1][0] * lower) / rows[r][0];
        }
    }
    if (all_zero(rows[n])) {
        normalize(n);
    }

    int changes = 0;
    int prev_sign = 0;
    for (size_t r = 0; r <= n; ++r) {
        int s = rows[r][0].sign();
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign) ++changes;
        prev_sign = s;
    }

    StabilityVerdict verdict;
    if (changes > 0) {
        verdict = StabilityVerdict::Unstable;
    } else if (used_epsilon || used_auxiliary) {
        verdict = StabilityVerdict::Marginal;
    } else {
        verdict = StabilityVerdict::Stable;
    }
    return {verdict, changes, used_epsilon, used_auxiliary};
}

const char* stability_verdict_name(StabilityVerdict v) noexcept {
    switch (v) {
        case StabilityVerdict::Stable: return "Stable";
        case StabilityVerdict::Marginal: return "Marginal";
        case StabilityVerdict::Unstable: return "Unstable";
    }
    return "?";
}

}  // namespace lctk
