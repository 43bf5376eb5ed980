#include "lctk/laplace.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace lctk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

LaplaceResult transform(const TimeExpr& f, IvPolicy policy);

LaplaceResult leaf(TransferFunction tf, double roc) { return {std::move(tf), roc}; }

}  // namespace

LaplaceResult laplace_symbolic(const TimeExpr& f, IvPolicy policy) {
    return transform(f, policy);
}

namespace {

LaplaceResult transform(const TimeExpr& f, IvPolicy policy) {
    return std::visit(
        [&](const auto& node) -> LaplaceResult {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ConstNode>) {
                if (node.c.is_zero()) {
                    return leaf(TransferFunction::zero(), kNegInf);
                }
                // L{c} = c/s
                return leaf({SPoly(ParamPoly(node.c)), SPoly::s()}, 0.0);
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                // L{t^n} = n!/s^{n+1}
                return leaf({SPoly(ParamPoly(factorial(node.n))), SPoly::s_power(node.n + 1)},
                            0.0);
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                // L{e^{at}} = 1/(s - a)
                SPoly den = SPoly::s() - SPoly(ParamPoly(node.a));
                return leaf({SPoly(1), std::move(den)}, node.a.to_double());
            } else if constexpr (std::is_same_v<T, SinNode>) {
                // L{sin wt} = w/(s^2 + w^2)
                SPoly den = SPoly::s_power(2) + SPoly(ParamPoly(node.w * node.w));
                return leaf({SPoly(ParamPoly(node.w)), std::move(den)}, 0.0);
            } else if constexpr (std::is_same_v<T, CosNode>) {
                // L{cos wt} = s/(s^2 + w^2)
                SPoly den = SPoly::s_power(2) + SPoly(ParamPoly(node.w * node.w));
                return leaf({SPoly::s(), std::move(den)}, 0.0);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                if (node.c.is_zero()) {
                    return leaf(TransferFunction::zero(), kNegInf);
                }
                LaplaceResult r = transform(*node.f, policy);
                return leaf({r.tf.num().scaled(node.c), r.tf.den(), r.tf.delay()}, r.roc);
            } else if constexpr (std::is_same_v<T, AddNode>) {
                LaplaceResult a = transform(*node.f, policy);
                LaplaceResult b = transform(*node.g, policy);
                if (a.tf.is_zero()) return b;
                if (b.tf.is_zero()) return a;
                return leaf(tf_arith(TfOp::Add, a.tf, b.tf), std::max(a.roc, b.roc));
            } else if constexpr (std::is_same_v<T, ExpMulNode>) {
                LaplaceResult r = transform(*node.f, policy);
                if (r.tf.delay() != 0.0 && !node.a.is_zero()) {
                    throw NonRationalResult(
                        "frequency shift of a delayed term needs the irrational factor "
                        "e^{a*d}");
                }
                // F(s - a), region shifts right by a
                Rational shift = -node.a;
                return leaf({r.tf.num().substitute_shifted_s(shift),
                             r.tf.den().substitute_shifted_s(shift), r.tf.delay()},
                            r.roc + node.a.to_double());
            } else if constexpr (std::is_same_v<T, ShiftRightNode>) {
                LaplaceResult r = transform(*node.f, policy);
                return leaf({r.tf.num(), r.tf.den(), r.tf.delay() + node.a.to_double()}, r.roc);
            } else if constexpr (std::is_same_v<T, TimeScaleNode>) {
                // L{f(ct)} = (1/c) F(s/c); a delay d rescales to d/c
                LaplaceResult r = transform(*node.f, policy);
                Rational inv = node.c.reciprocal();
                SPoly num = r.tf.num().substitute_scaled_s(inv).scaled(inv);
                SPoly den = r.tf.den().substitute_scaled_s(inv);
                double delay = r.tf.delay() / node.c.to_double();
                return leaf({std::move(num), std::move(den), delay},
                            r.roc * node.c.to_double());
            } else if constexpr (std::is_same_v<T, ModCosNode> || std::is_same_v<T, ModSinNode>) {
                LaplaceResult r = transform(*node.f, policy);
                if (r.tf.delay() != 0.0) {
                    throw NonRationalResult(
                        "modulation of a time-shifted term is not a rational function");
                }
                // F(s -+ jb) combined into a real-coefficient rational function
                auto [num_re, num_im] = r.tf.num().split_complex_shift(node.b);
                auto [den_re, den_im] = r.tf.den().split_complex_shift(node.b);
                SPoly den = den_re * den_re + den_im * den_im;
                SPoly num;
                if constexpr (std::is_same_v<T, ModCosNode>) {
                    num = num_re * den_re + num_im * den_im;
                } else {
                    num = num_re * den_im - num_im * den_re;
                }
                return leaf({std::move(num), std::move(den), 0.0}, r.roc);
            } else if constexpr (std::is_same_v<T, DerivNode>) {
                if (contains_shift(*node.f)) {
                    throw UnsupportedComposition(
                        "differentiation of a time-shifted signal is unsupported");
                }
                if (policy == IvPolicy::ZeroInit && !node.iv.empty()) {
                    throw InvalidArgument(
                        "zero-init policy but the derivative node carries initial values");
                }
                if (policy == IvPolicy::Explicit && node.iv.size() != node.k) {
                    throw InvalidArgument("explicit-iv policy requires one value per order");
                }
                LaplaceResult r = transform(*node.f, policy);
                // L{f^(k)} = s^k F - sum_{i<k} s^{k-1-i} f^(i)(0)
                SPoly num = SPoly::s_power(node.k) * r.tf.num();
                if (!node.iv.empty()) {
                    SPoly correction;
                    for (unsigned i = 0; i < node.k; ++i) {
                        correction += SPoly::s_power(node.k - 1 - i, ParamPoly(node.iv[i]));
                    }
                    num -= correction * r.tf.den();
                }
                return leaf({std::move(num), r.tf.den(), r.tf.delay()}, r.roc);
            } else {  // IntegNode
                LaplaceResult r = transform(*node.f, policy);
                return leaf({r.tf.num(), r.tf.den() * SPoly::s(), r.tf.delay()},
                            std::max(r.roc, 0.0));
            }
        },
        f.node());
}

}  // namespace

ExpOrderWitness exp_order_witness(const TimeExpr& f) {
    return std::visit(
        [&](const auto& node) -> ExpOrderWitness {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ConstNode>) {
                double m = std::abs(node.c.to_double());
                return {m > 0.0 ? m : 1.0, 0.0};
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                if (node.n == 0) return {1.0, 0.0};
                // t^n <= (4n/e)^n e^{t/4}: maximum of t^n e^{-t/4} sits at t = 4n
                double n = static_cast<double>(node.n);
                return {std::pow(4.0 * n / std::exp(1.0), n), 0.25};
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                return {1.0, node.a.to_double()};
            } else if constexpr (std::is_same_v<T, SinNode> || std::is_same_v<T, CosNode>) {
                return {1.0, 0.0};
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                if (node.c.is_zero()) return {1.0, 0.0};
                ExpOrderWitness w = exp_order_witness(*node.f);
                return {std::abs(node.c.to_double()) * w.M, w.a};
            } else if constexpr (std::is_same_v<T, AddNode>) {
                ExpOrderWitness wf = exp_order_witness(*node.f);
                ExpOrderWitness wg = exp_order_witness(*node.g);
                return {wf.M + wg.M, std::max(wf.a, wg.a)};
            } else if constexpr (std::is_same_v<T, ExpMulNode>) {
                ExpOrderWitness w = exp_order_witness(*node.f);
                return {w.M, w.a + node.a.to_double()};
            } else if constexpr (std::is_same_v<T, ShiftRightNode>) {
                // |f(t-a)|u(t-a) <= M e^{w.a (t-a)} = (M e^{-w.a a}) e^{w.a t}
                ExpOrderWitness w = exp_order_witness(*node.f);
                return {w.M * std::exp(-w.a * node.a.to_double()), w.a};
            } else if constexpr (std::is_same_v<T, TimeScaleNode>) {
                ExpOrderWitness w = exp_order_witness(*node.f);
                return {w.M, w.a * node.c.to_double()};
            } else if constexpr (std::is_same_v<T, ModCosNode> || std::is_same_v<T, ModSinNode>) {
                return exp_order_witness(*node.f);
            } else if constexpr (std::is_same_v<T, DerivNode>) {
                TimeExprPtr expanded = expand_derivs(node.f);
                for (unsigned i = 0; i < node.k; ++i) expanded = diff(expanded);
                return exp_order_witness(*expanded);
            } else {  // IntegNode
                ExpOrderWitness w = exp_order_witness(*node.f);
                if (w.a > 0.0) {
                    return {w.M / w.a, w.a};
                }
                if (w.a == 0.0) {
                    // |integral| <= M t <= (4M/e) e^{t/4}
                    return {4.0 * w.M / std::exp(1.0), 0.25};
                }
                return {w.M / -w.a, 0.0};
            }
        },
        f.node());
}

ExistenceCheck laplace_exists_check(const TimeExpr& f, std::complex<double> s) {
    ExpOrderWitness w = exp_order_witness(f);
    return {s.real() > w.a, w};
}

namespace {

struct ComplexSimpson {
    const std::function<std::complex<double>(double)>& g;
    size_t panels = 0;
    size_t panel_cap = size_t{1} << 20;

    std::complex<double> run(double a, double b, double tol) {
        std::complex<double> fa = g(a);
        std::complex<double> fb = g(b);
        std::complex<double> fm = g(0.5 * (a + b));
        std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return rec(a, b, fa, fm, fb, whole, tol);
    }

    std::complex<double> rec(double a, double b, std::complex<double> fa, std::complex<double> fm,
                             std::complex<double> fb, std::complex<double> whole, double tol) {
        if (++panels > panel_cap) {
            throw ToleranceNotMet("quadrature refinement exceeded the panel budget");
        }
        double m = 0.5 * (a + b);
        std::complex<double> flm = g(0.5 * (a + m));
        std::complex<double> frm = g(0.5 * (m + b));
        std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        std::complex<double> delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        return rec(a, m, fa, flm, fm, left, 0.5 * tol) +
               rec(m, b, fm, frm, fb, right, 0.5 * tol);
    }
};

}  // namespace

std::complex<double> laplace_numeric(const TimeExpr& f, std::complex<double> s, double tol,
                                     double margin) {
    if (margin < 0.0) {
        throw InvalidArgument("margin must be nonnegative");
    }
    ExpOrderWitness w = exp_order_witness(f);
    double sigma = s.real();
    if (sigma <= w.a + margin) {
        throw ConvergenceMargin("Re s must exceed the exponential-order abscissa " +
                                std::to_string(w.a) + " by the margin " + std::to_string(margin));
    }
    // truncation T with tail bound M e^{(a - sigma) T}/(sigma - a) < tol/2
    double gap = sigma - w.a;
    double T = std::log(std::max(2.0 * w.M / (gap * (tol / 2.0)), 2.0)) / gap;
    T = std::max(T, 1.0);

    TimeEvaluator eval;
    std::function<std::complex<double>(double)> g = [&](double t) {
        return eval(f, t) * std::exp(-s * t);
    };
    ComplexSimpson quad{g};
    return quad.run(0.0, T, tol / 2.0);
}

}  // namespace lctk
