#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lctk/laplace.hpp"
#include "lctk/tf_io.hpp"
#include "support.hpp"

using namespace lctk;
namespace ts = testsupport;

namespace {

std::complex<double> symbolic_at(const LaplaceResult& r, std::complex<double> s) {
    return tf_eval(r.tf, {}, s);
}

}  // namespace

TEST_CASE("base-case transforms against the quadrature oracle") {
    SUBCASE("L{1} = 1/s, oracle at s=2 gives 0.5") {
        LaplaceResult r = laplace_symbolic(*te::constant(1));
        CHECK(tf_equal(r.tf, tf_from_text("1/s")));
        CHECK(r.roc == 0.0);
        CHECK(std::abs(laplace_numeric(*te::constant(1), {2.0, 0.0}, 1e-6) - 0.5) < 1e-6);
    }
    SUBCASE("L{e^{3t}} = 1/(s-3), oracle at s=5 gives 0.5") {
        LaplaceResult r = laplace_symbolic(*te::exponential(3));
        CHECK(tf_equal(r.tf, tf_from_text("1/(s - 3)")));
        CHECK(r.roc == 3.0);
        CHECK(std::abs(laplace_numeric(*te::exponential(3), {5.0, 0.0}, 1e-6) - 0.5) < 1e-6);
    }
    SUBCASE("L{0} is the zero function with sentinel ROC") {
        LaplaceResult r = laplace_symbolic(*te::constant(0));
        CHECK(r.tf.is_zero());
        CHECK(std::isinf(r.roc));
        CHECK(r.roc < 0.0);
    }
    SUBCASE("L{t^n} = n!/s^{n+1}") {
        LaplaceResult r = laplace_symbolic(*te::power(3));
        CHECK(tf_equal(r.tf, tf_from_text("6/s^4")));
    }
    SUBCASE("L{sin 2t} = 2/(s^2+4) and L{cos 5t} = s/(s^2+25)") {
        CHECK(tf_equal(laplace_symbolic(*te::sine(2)).tf, tf_from_text("2/(s^2 + 4)")));
        CHECK(tf_equal(laplace_symbolic(*te::cosine(5)).tf, tf_from_text("s/(s^2 + 25)")));
    }
}

TEST_CASE("differentiation rule under zero initial conditions multiplies by s^k") {
    TimeExprPtr f = te::sine(1);
    LaplaceResult base = laplace_symbolic(*f);
    LaplaceResult second = laplace_symbolic(*te::deriv(2, f));
    CHECK(tf_equal(second.tf,
                   tf_arith(TfOp::Mul, tf_from_text("s^2"), base.tf)));
}

TEST_CASE("explicit initial values absorb the polynomial correction") {
    // f = cos t, f(0) = 1: L{f'} = s*s/(s^2+1) - 1 = -1/(s^2+1) = L{-sin t}
    TimeExprPtr expr = te::deriv(1, te::cosine(1), {Rational(1)});
    LaplaceResult r = laplace_symbolic(*expr, IvPolicy::Explicit);
    CHECK(tf_equal(r.tf, tf_from_text("-1/(s^2 + 1)")));

    // numeric agreement with the true derivative -sin t
    std::complex<double> s{1.5, 0.5};
    std::complex<double> numeric = laplace_numeric(*expr, s, 1e-8);
    CHECK(std::abs(numeric - symbolic_at(r, s)) < 1e-6);

    CHECK_THROWS_AS(laplace_symbolic(*expr, IvPolicy::ZeroInit), InvalidArgument);
    CHECK_THROWS_AS(laplace_symbolic(*te::deriv(1, te::cosine(1)), IvPolicy::Explicit),
                    InvalidArgument);
}

TEST_CASE("time shift becomes a pure delay factor") {
    TimeExprPtr f = te::shift_right(1, te::constant(1));
    LaplaceResult r = laplace_symbolic(*f);
    CHECK(r.tf.delay() == 1.0);
    std::complex<double> v = tf_eval(r.tf, {}, {1.0, 0.0});
    CHECK(std::abs(v.real() - std::exp(-1.0)) < 1e-12);
    CHECK(std::abs(laplace_numeric(*f, {1.0, 0.0}, 1e-7) - v) < 1e-5);
}

TEST_CASE("laplace_numeric spec examples") {
    CHECK(std::abs(laplace_numeric(*te::exponential(-1), {1.0, 0.0}, 1e-8) - 0.5) < 1e-8);
    CHECK(std::abs(laplace_numeric(*te::sine(2), {2.0, 0.0}, 1e-6) - 0.25) < 1e-6);
    CHECK_THROWS_AS(laplace_numeric(*te::exponential(2), {1.0, 0.0}, 1e-6), ConvergenceMargin);
}

TEST_CASE("quadrature reports a stalled refinement") {
    // megahertz oscillation over a ~24 s truncation window blows the panel cap
    CHECK_THROWS_AS(laplace_numeric(*te::sine(1000000), {1.0, 0.0}, 1e-10), ToleranceNotMet);
}

TEST_CASE("exp_order_witness spec examples") {
    ExpOrderWitness w1 = exp_order_witness(*te::exponential(3));
    CHECK(w1.M == 1.0);
    CHECK(w1.a == 3.0);

    ExpOrderWitness w2 = exp_order_witness(*te::cosine(5));
    CHECK(w2.M == 1.0);
    CHECK(w2.a == 0.0);

    ExpOrderWitness w3 = exp_order_witness(*te::add(te::exponential(1), te::exponential(2)));
    CHECK(w3.M == 2.0);
    CHECK(w3.a == 2.0);
}

TEST_CASE("laplace_exists_check uses a strict inequality") {
    auto f = te::exponential(2);
    ExistenceCheck yes = laplace_exists_check(*f, {3.0, 1.0});
    CHECK(yes.exists);
    CHECK(yes.witness.M == 1.0);
    CHECK(yes.witness.a == 2.0);
    CHECK_FALSE(laplace_exists_check(*f, {2.0, 0.0}).exists);
    CHECK(laplace_exists_check(*te::constant(1), {0.5, 0.0}).exists);
}

TEST_CASE("oracle agreement across the corpus") {
    for (const auto& entry : ts::laplace_corpus()) {
        CAPTURE(entry.name);
        LaplaceResult r = laplace_symbolic(*entry.expr);
        for (auto s : ts::corpus_sample_points(*entry.expr, r.roc)) {
            CAPTURE(s.real());
            CAPTURE(s.imag());
            std::complex<double> numeric = laplace_numeric(*entry.expr, s, 1e-6);
            std::complex<double> symbolic = symbolic_at(r, s);
            CHECK(std::abs(numeric - symbolic) <= 1e-4 * (1.0 + std::abs(symbolic)));
        }
    }
}

TEST_CASE("witness soundness over sampled time") {
    TimeEvaluator eval;
    for (const auto& entry : ts::laplace_corpus()) {
        CAPTURE(entry.name);
        ExpOrderWitness w = exp_order_witness(*entry.expr);
        CHECK(w.M > 0.0);
        double worst = 0.0;
        for (int i = 0; i <= 500; ++i) {
            double t = 50.0 * i / 500.0;
            double bound = w.M * std::exp(w.a * t);
            worst = std::max(worst, std::abs(eval(*entry.expr, t)) / bound);
        }
        CHECK(worst <= 1.0 + 1e-9);
    }
}

TEST_CASE("linearity of the transform") {
    TimeExprPtr f = te::exponential(-1);
    TimeExprPtr g = te::sine(2);
    Rational a(3);
    Rational b{BigInt(-1), BigInt(2)};
    LaplaceResult combined =
        laplace_symbolic(*te::add(te::scale(a, f), te::scale(b, g)));
    TransferFunction expected = tf_arith(
        TfOp::Add,
        tf_arith(TfOp::Mul, TransferFunction::constant(a), laplace_symbolic(*f).tf),
        tf_arith(TfOp::Mul, TransferFunction::constant(b), laplace_symbolic(*g).tf));
    CHECK(tf_equal(combined.tf, expected));
}

TEST_CASE("derivative of the integral is the identity under zero init") {
    for (TimeExprPtr f : {te::sine(1), te::exponential(-2), te::power(2)}) {
        LaplaceResult direct = laplace_symbolic(*f);
        LaplaceResult through = laplace_symbolic(*te::deriv(1, te::integ(f)));
        CHECK(tf_equal(direct.tf, through.tf));
    }
}

TEST_CASE("integration divides by s and clips the region at zero") {
    LaplaceResult r = laplace_symbolic(*te::integ(te::exponential(-2)));
    CHECK(tf_equal(r.tf, tf_from_text("1/(s*(s+2))")));
    CHECK(r.roc == 0.0);  // max(-2, 0)
}

TEST_CASE("time scaling matches (1/c) F(s/c) numerically") {
    TimeExprPtr f = te::add(te::exponential(-1), te::sine(3));
    Rational c{BigInt(5), BigInt(2)};
    LaplaceResult scaled = laplace_symbolic(*te::time_scale(c, f));
    LaplaceResult base = laplace_symbolic(*f);
    for (std::complex<double> s : {std::complex<double>{1.0, 0.0}, {2.0, 1.0}, {0.5, -2.0}}) {
        std::complex<double> lhs = tf_eval(scaled.tf, {}, s);
        std::complex<double> rhs = tf_eval(base.tf, {}, s / c.to_double()) / c.to_double();
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("modulation rules produce real-coefficient rational functions") {
    // cos/sin modulation of the unit constant reproduce the trig transforms
    CHECK(tf_equal(laplace_symbolic(*te::mod_cos(4, te::constant(1))).tf,
                   tf_from_text("s/(s^2 + 16)")));
    CHECK(tf_equal(laplace_symbolic(*te::mod_sin(4, te::constant(1))).tf,
                   tf_from_text("4/(s^2 + 16)")));
    // t sin 3t has the table form 6s/(s^2+9)^2
    CHECK(tf_equal(laplace_symbolic(*te::mod_sin(3, te::power(1))).tf,
                   tf_from_text("6*s/((s^2 + 9)^2)")));
}

TEST_CASE("compositions that leave the rational class are rejected") {
    TimeExprPtr shifted = te::shift_right(1, te::exponential(-1));
    CHECK_THROWS_AS(laplace_symbolic(*te::mod_cos(1, shifted)), NonRationalResult);
    CHECK_THROWS_AS(laplace_symbolic(*te::mod_sin(1, shifted)), NonRationalResult);
    CHECK_THROWS_AS(laplace_symbolic(*te::exp_mul(1, shifted)), NonRationalResult);
    CHECK_THROWS_AS(laplace_symbolic(*te::deriv(1, shifted)), UnsupportedComposition);
    CHECK_THROWS_AS(laplace_symbolic(*te::add(shifted, te::constant(1))), DelayMismatch);

    // rescaling a delay stays exact
    LaplaceResult r = laplace_symbolic(*te::time_scale(2, shifted));
    CHECK(r.tf.delay() == 0.5);
}

TEST_CASE("s-expression round-trip") {
    const char* text = "(add (scale 3 (exp -1)) (modcos 2 (pow 1)))";
    TimeExprPtr parsed = time_expr_from_sexpr(text);
    std::string printed = time_expr_to_sexpr(*parsed);
    TimeExprPtr reparsed = time_expr_from_sexpr(printed);
    CHECK(printed == time_expr_to_sexpr(*reparsed));
    CHECK(tf_equal(laplace_symbolic(*parsed).tf, laplace_symbolic(*reparsed).tf));

    CHECK_THROWS_AS(time_expr_from_sexpr("(frob 1)"), SyntaxError);
    CHECK_THROWS_AS(time_expr_from_sexpr("(shift -1 (pow 1))"), InvalidArgument);
    TimeExprPtr with_iv = time_expr_from_sexpr("(deriv 2 (cos 1) 1 0)");
    CHECK(time_expr_to_sexpr(*with_iv) == "(deriv 2 (cos 1) 1 0)");
}
