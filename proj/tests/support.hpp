#pragma once

// Shared test helpers: deterministic random generators for exact types and
// the Eigen-backed independent oracles (companion-matrix eigenvalues, direct
// complex nodal solve). Oracles live here, outside the library, so they
// cannot share code with the implementation paths they check.

#include <complex>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lctk/laplace.hpp"
#include "lctk/netlist.hpp"
#include "lctk/transfer_function.hpp"

namespace testsupport {

using lctk::Rational;

inline Rational random_rational(std::mt19937& rng, int max_num = 20, int max_den = 10) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(lctk::BigInt(num(rng)), lctk::BigInt(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_num = 20, int max_den = 10) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Rational random_positive_rational(std::mt19937& rng, int max_num = 20, int max_den = 10) {
    return random_nonzero_rational(rng, max_num, max_den).abs();
}

/// Random parameter polynomial over the given names (possibly constant).
inline lctk::ParamPoly random_param_poly(std::mt19937& rng,
                                         const std::vector<std::string>& names,
                                         unsigned max_terms = 3, unsigned max_exp = 2) {
    std::uniform_int_distribution<unsigned> term_count(1, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    lctk::ParamPoly p;
    unsigned terms = term_count(rng);
    for (unsigned t = 0; t < terms; ++t) {
        lctk::Monomial mono;
        for (const auto& name : names) {
            unsigned e = exp(rng);
            if (e > 0) mono = mono * lctk::Monomial::var(name, e);
        }
        p += lctk::ParamPoly::term(random_rational(rng), mono);
    }
    return p;
}

inline lctk::SPoly random_spoly(std::mt19937& rng, const std::vector<std::string>& names,
                                unsigned max_degree = 5) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    unsigned d = deg(rng);
    std::vector<lctk::ParamPoly> coeffs;
    for (unsigned k = 0; k <= d; ++k) {
        coeffs.push_back(random_param_poly(rng, names));
    }
    return lctk::SPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// companion-matrix eigenvalue oracle

/// Roots of sum_k c[k] s^k (ascending coefficients, c.back() != 0).
inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& c) {
    size_t n = c.size() - 1;
    if (n == 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (size_t i = 1; i < n; ++i) companion(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
    for (size_t k = 0; k < n; ++k) {
        companion(static_cast<long>(k), static_cast<long>(n - 1)) = -c[k] / c[n];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    std::vector<std::complex<double>> roots;
    for (long i = 0; i < solver.eigenvalues().size(); ++i) {
        roots.push_back(solver.eigenvalues()[i]);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// direct complex nodal solve (double precision, no symbolic algebra)

/// Solves the nodal system of an R/C/op-amp netlist numerically at the given
/// s and returns Vout/Vin.
inline std::complex<double> complex_nodal_solve(const lctk::Netlist& net,
                                                const std::map<std::string, double>& bind,
                                                std::complex<double> s) {
    using lctk::Component;
    std::vector<std::string> unknowns;
    for (const auto& n : net.nodes()) {
        if (n != "gnd" && n != net.input_node()) unknowns.push_back(n);
    }
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;

    long n = static_cast<long>(unknowns.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);

    std::map<std::string, const Component*> opamp_out;
    for (const auto& c : net.components()) {
        if (c.kind == Component::Kind::OpAmp) opamp_out[c.terminals[2]] = &c;
    }

    auto add = [&](size_t row, const std::string& node, std::complex<double> coeff) {
        if (node == "gnd") return;
        if (node == net.input_node()) {
            b(static_cast<long>(row)) -= coeff;  // Vin = 1
        } else {
            m(static_cast<long>(row), static_cast<long>(col.at(node))) += coeff;
        }
    };

    for (size_t row = 0; row < unknowns.size(); ++row) {
        const std::string& v = unknowns[row];
        auto it = opamp_out.find(v);
        if (it != opamp_out.end()) {
            add(row, it->second->terminals[0], {1.0, 0.0});
            add(row, it->second->terminals[1], {-1.0, 0.0});
            continue;
        }
        for (const auto& c : net.components()) {
            if (c.kind == Component::Kind::OpAmp) continue;
            if (c.terminals[0] == c.terminals[1]) continue;
            if (c.terminals[0] != v && c.terminals[1] != v) continue;
            const std::string& other = c.terminals[0] == v ? c.terminals[1] : c.terminals[0];
            double value = c.value.eval(bind);
            std::complex<double> admittance = c.kind == Component::Kind::Resistor
                                                  ? std::complex<double>(1.0 / value, 0.0)
                                                  : value * s;
            add(row, v, admittance);
            add(row, other, -admittance);
        }
    }

    Eigen::VectorXcd x = m.fullPivLu().solve(b);
    if (net.output_node() == "gnd") return {0.0, 0.0};
    return x(static_cast<long>(col.at(net.output_node())));
}

// ---------------------------------------------------------------------------
// the Laplace oracle corpus

struct CorpusEntry {
    const char* name;
    lctk::TimeExprPtr expr;
};

/// The 20-expression corpus exercised against the quadrature oracle.
inline std::vector<CorpusEntry> laplace_corpus() {
    namespace te = lctk::te;
    Rational half{lctk::BigInt(1), lctk::BigInt(2)};
    Rational third{lctk::BigInt(1), lctk::BigInt(3)};
    Rational five_halves{lctk::BigInt(5), lctk::BigInt(2)};
    return {
        {"const 1", te::constant(1)},
        {"const 5/2", te::constant(five_halves)},
        {"t", te::power(1)},
        {"t^3", te::power(3)},
        {"e^-t", te::exponential(-1)},
        {"e^3t", te::exponential(3)},
        {"sin 2t", te::sine(2)},
        {"cos 5t", te::cosine(5)},
        {"3 e^-t", te::scale(3, te::exponential(-1))},
        {"e^-t + sin t", te::add(te::exponential(-1), te::sine(1))},
        {"e^-2t sin 3t", te::exp_mul(-2, te::sine(3))},
        {"e^t t^2", te::exp_mul(1, te::power(2))},
        {"u(t-1)", te::shift_right(1, te::constant(1))},
        {"e^-(t-1/2) u(t-1/2)", te::shift_right(half, te::exponential(-1))},
        {"sin(2t) via scaling", te::time_scale(2, te::sine(1))},
        {"e^-t via scaling", te::time_scale(third, te::exponential(-3))},
        {"e^-t cos 2t", te::mod_cos(2, te::exponential(-1))},
        {"t sin 3t", te::mod_sin(3, te::power(1))},
        {"d/dt sin 2t", te::deriv(1, te::sine(2))},
        {"integral of sin t", te::integ(te::sine(1))},
    };
}

/// Sample points with Re s >= roc + 0.5 that also clear the witness margin.
inline std::vector<std::complex<double>> corpus_sample_points(const lctk::TimeExpr& expr,
                                                              double roc) {
    double base = std::max(roc, lctk::exp_order_witness(expr).a);
    return {
        {base + 0.5, 0.0}, {base + 1.0, 0.0},  {base + 2.0, 0.0},
        {base + 1.0, 1.0}, {base + 0.75, 2.0},
    };
}

}  // namespace testsupport
