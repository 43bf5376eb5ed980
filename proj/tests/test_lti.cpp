#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lctk/lti.hpp"
#include "lctk/tf_io.hpp"
#include "support.hpp"

using namespace lctk;
namespace ts = testsupport;

namespace {

OdeSystem first_order() {
    return {{ParamPoly(1), ParamPoly(1)}, {ParamPoly(1)}};  // 1/(s+1)
}

OdeSystem second_order() {
    return {{ParamPoly(1), ParamPoly(1), ParamPoly(1)}, {ParamPoly(1)}};  // 1/(s^2+s+1)
}

}  // namespace

TEST_CASE("transfer_function repackages the coefficient lists exactly") {
    TransferFunction tf1 = transfer_function(first_order());
    CHECK(tf_equal(tf1, tf_from_text("1/(s + 1)")));
    CHECK(tf1.delay() == 0.0);

    SUBCASE("echo exactness at degree 20") {
        std::mt19937 rng(101);
        std::vector<ParamPoly> alpha;
        std::vector<ParamPoly> beta;
        for (int k = 0; k <= 20; ++k) {
            alpha.push_back(ParamPoly(ts::random_nonzero_rational(rng)));
        }
        for (int k = 0; k <= 19; ++k) {
            beta.push_back(ParamPoly(ts::random_nonzero_rational(rng)));
        }
        OdeSystem sys{alpha, beta};
        TransferFunction tf = transfer_function(sys);
        REQUIRE(tf.den().coeffs().size() == 21);
        REQUIRE(tf.num().coeffs().size() == 20);
        for (size_t k = 0; k <= 20; ++k) CHECK(tf.den().coeff(k) == alpha[k]);
        for (size_t k = 0; k <= 19; ++k) CHECK(tf.num().coeff(k) == beta[k]);
    }

    SUBCASE("invariants") {
        CHECK_THROWS_AS(OdeSystem({ParamPoly(1)}, {ParamPoly(1), ParamPoly(1)}), ImproperSystem);
        CHECK_THROWS_AS(OdeSystem({ParamPoly()}, {ParamPoly(1)}), ZeroDenominatorPoly);
        OdeSystem improper = OdeSystem::improper({ParamPoly(), ParamPoly(1)},
                                                 {ParamPoly(1), ParamPoly(1), ParamPoly(1)});
        CHECK_FALSE(improper.is_proper());
        CHECK(transfer_function(improper).num().degree() == 2);
    }
}

TEST_CASE("frequency response examples") {
    OdeSystem sys = first_order();
    std::complex<double> v = frequency_response_sys(sys, {}, 1.0);
    CHECK(std::abs(std::abs(v) - 0.70711) < 1e-5);
    CHECK(std::abs(std::arg(v) * 180.0 / 3.14159265358979 + 45.0) < 1e-3);

    CHECK(std::abs(frequency_response_sys(sys, {}, 0.0) - 1.0) < 1e-15);

    OdeSystem integrator{{ParamPoly(), ParamPoly(1)}, {ParamPoly(1)}};
    CHECK_THROWS_AS(frequency_response_sys(integrator, {}, 0.0), PoleEvaluation);
}

TEST_CASE("conjugate symmetry of the frequency response") {
    OdeSystem sys = second_order();
    for (double w : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        std::complex<double> pos = frequency_response_sys(sys, {}, w);
        std::complex<double> neg = frequency_response_sys(sys, {}, -w);
        CHECK(std::abs(neg - std::conj(pos)) <= 1e-12 * (1.0 + std::abs(pos)));
    }
}

TEST_CASE("step simulation matches the closed form for 1/(s+1)") {
    OdeSystem sys = first_order();
    TimeSeries out = simulate(sys, {}, InputSignal::step(), 1e-3, 10.0);
    REQUIRE(out.samples.size() == 10001);
    CHECK(std::abs(out.samples.back() - (1.0 - std::exp(-10.0))) < 1e-4);
    CHECK(std::abs(out.samples.back() - 0.99995) < 1e-4);
    CHECK(std::abs(out.samples[1000] - (1.0 - std::exp(-1.0))) < 1e-4);
    CHECK(std::abs(out.samples[1000] - 0.63212) < 1e-4);
}

TEST_CASE("state-space form reconstructs the bound transfer function") {
    // C (sI - A)^{-1} B + D must equal beta(s)/alpha(s) at sampled s
    std::mt19937 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        size_t n = 1 + static_cast<size_t>(trial % 4);
        std::vector<ParamPoly> alpha;
        std::vector<ParamPoly> beta;
        for (size_t k = 0; k <= n; ++k) alpha.push_back(ParamPoly(ts::random_nonzero_rational(rng, 9, 4)));
        for (size_t k = 0; k <= n; ++k) beta.push_back(ParamPoly(ts::random_nonzero_rational(rng, 9, 4)));
        OdeSystem sys{alpha, beta};
        StateSpace ss = StateSpace::from_ode(sys, {});
        TransferFunction tf = transfer_function(sys);

        for (std::complex<double> s : {std::complex<double>{0.7, 0.3}, {2.0, -1.0}}) {
            // solve (sI - A) x = B with Eigen, then y = C x + D
            long dim = static_cast<long>(n);
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
            Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim);
            for (long i = 0; i < dim; ++i) {
                b(i) = ss.B[static_cast<size_t>(i)];
                for (long j = 0; j < dim; ++j) {
                    m(i, j) = (i == j ? s : 0.0) - ss.A[static_cast<size_t>(i)][static_cast<size_t>(j)];
                }
            }
            Eigen::VectorXcd x = m.fullPivLu().solve(b);
            std::complex<double> y = ss.D;
            for (long j = 0; j < dim; ++j) y += ss.C[static_cast<size_t>(j)] * x(j);
            std::complex<double> expected = tf_eval(tf, {}, s);
            CHECK(std::abs(y - expected) <= 1e-9 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("sine input settles to the frequency response amplitude") {
    OdeSystem sys = first_order();
    double w = 1.0;
    TimeSeries out = simulate(sys, {}, InputSignal::sine(w), 1e-3, 40.0);
    // steady state: |H(jw)| sin(wt + arg H(jw))
    std::complex<double> h = frequency_response_sys(sys, {}, w);
    double worst = 0.0;
    for (size_t k = 30000; k < out.samples.size(); ++k) {
        double t = static_cast<double>(k) * out.dt;
        double expected = std::abs(h) * std::sin(w * t + std::arg(h));
        worst = std::max(worst, std::abs(out.samples[k] - expected));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("zero input stays at the zero state") {
    OdeSystem sys = second_order();
    TimeSeries out = simulate(sys, {}, InputSignal::custom({}), 1e-2, 1.0);
    for (double y : out.samples) CHECK(y == 0.0);
}

TEST_CASE("simulation converges at fourth order") {
    OdeSystem sys = first_order();
    auto max_error = [&](double dt) {
        TimeSeries out = simulate(sys, {}, InputSignal::step(), dt, 5.0);
        double worst = 0.0;
        for (size_t k = 0; k < out.samples.size(); ++k) {
            double t = static_cast<double>(k) * dt;
            worst = std::max(worst, std::abs(out.samples[k] - (1.0 - std::exp(-t))));
        }
        return worst;
    };
    double coarse = max_error(0.1);
    double fine = max_error(0.05);
    CHECK(coarse / fine >= 12.0);
}

TEST_CASE("bound leading coefficient must stay nonzero") {
    OdeSystem sys{{ParamPoly(1), ParamPoly::var("K1")}, {ParamPoly(1)}};
    Binding zero = Binding::approx({{"K1", 0.0}});
    CHECK_THROWS_AS(simulate(sys, zero, InputSignal::step(), 1e-2, 1.0),
                    SingularLeadingCoefficient);
    OdeSystem improper = OdeSystem::improper({ParamPoly(), ParamPoly(1)},
                                             {ParamPoly(1), ParamPoly(1), ParamPoly(1)});
    CHECK_THROWS_AS(simulate(improper, {}, InputSignal::step(), 1e-2, 1.0), ImproperSystem);
}

TEST_CASE("oracle_check_tf spec examples") {
    std::vector<std::complex<double>> samples{{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}};

    SUBCASE("first-order self consistency") {
        OracleReport report =
            oracle_check_tf(first_order(), tf_from_text("1/(s+1)"), {}, samples);
        CHECK(report.max_rel_error <= 1e-2);
        CHECK(report.pass(1e-2));
    }
    SUBCASE("a wrong transfer function is flagged") {
        OracleReport report = oracle_check_tf(first_order(), tf_from_text("1/(s+2)"), {},
                                              {{1.0, 0.0}});
        CHECK(report.samples.size() == 1);
        CHECK(report.max_rel_error > 0.3);
        CHECK(report.max_rel_error < 0.37);  // (1/2 vs 1/3) / (1/3) ~ 0.5/0.333 - 1
        CHECK_FALSE(report.pass(1e-2));
    }
    SUBCASE("second-order self consistency") {
        OracleReport report =
            oracle_check_tf(second_order(), tf_from_text("1/(s^2+s+1)"), {}, {{2.0, 0.0}});
        CHECK(report.max_rel_error <= 1e-2);
    }
    SUBCASE("samples must sit in the right half plane") {
        CHECK_THROWS_AS(
            oracle_check_tf(first_order(), tf_from_text("1/(s+1)"), {}, {{-1.0, 0.0}}),
            ConvergenceMargin);
    }
}

TEST_CASE("ode json round-trip") {
    OdeSystem sys{{ParamPoly(Rational(BigInt(416), BigInt(10000))), ParamPoly::var("K1")},
                  {ParamPoly(Rational(1))}};
    auto j = ode_to_json(sys);
    OdeSystem round = ode_from_json(nlohmann::json::parse(j.dump()));
    CHECK(round.alpha() == sys.alpha());
    CHECK(round.beta() == sys.beta());
}

TEST_CASE("time series CSV export") {
    TimeSeries series{0.5, {0.0, 1.0, 0.5}};
    std::ostringstream os;
    write_timeseries_csv(os, series);
    CHECK(os.str() == "t,y\n0,0\n0.5,1\n1,0.5\n");
}

TEST_CASE("custom input interpolates linearly and vanishes past the end") {
    InputSignal in = InputSignal::custom({0.0, 1.0});
    CHECK(in.value(0.05, 0.1) == 0.5);
    CHECK(in.value(0.1, 0.1) == 1.0);
    CHECK(in.value(5.0, 0.1) == 0.0);

    InputSignal imp = InputSignal::impulse_approx();
    CHECK(imp.value(0.0, 0.1) == 10.0);
    CHECK(imp.value(0.2, 0.1) == 0.0);
}
