#include "lctk/lti.hpp"

#include <cmath>
#include <ostream>

#include "lctk/tf_io.hpp"

namespace lctk {

OdeSystem::OdeSystem(std::vector<ParamPoly> alpha, std::vector<ParamPoly> beta) {
    if (alpha.empty() || alpha.back().is_zero()) {
        throw ZeroDenominatorPoly("alpha_n must not be identically zero");
    }
    if (beta.empty()) beta.push_back(ParamPoly());
    if (beta.size() > alpha.size()) {
        throw ImproperSystem("input order m exceeds output order n; use OdeSystem::improper");
    }
    alpha_ = std::move(alpha);
    beta_ = std::move(beta);
}

OdeSystem OdeSystem::improper(std::vector<ParamPoly> alpha, std::vector<ParamPoly> beta) {
    if (alpha.empty() || alpha.back().is_zero()) {
        throw ZeroDenominatorPoly("alpha_n must not be identically zero");
    }
    if (beta.empty()) beta.push_back(ParamPoly());
    OdeSystem sys;
    sys.alpha_ = std::move(alpha);
    sys.beta_ = std::move(beta);
    return sys;
}

std::set<std::string> OdeSystem::free_params() const {
    std::set<std::string> out;
    for (const auto& c : alpha_) c.collect_params(out);
    for (const auto& c : beta_) c.collect_params(out);
    return out;
}

TransferFunction transfer_function(const OdeSystem& sys) {
    SPoly den{sys.alpha()};
    if (den.is_zero()) {
        throw ZeroDenominatorPoly("all alpha coefficients are identically zero");
    }
    return {SPoly{sys.beta()}, std::move(den), 0.0};
}

std::complex<double> frequency_response_sys(const OdeSystem& sys, const Binding& binding,
                                            double w) {
    return tf_eval(transfer_function(sys), binding, std::complex<double>(0.0, w));
}

StateSpace StateSpace::from_ode(const OdeSystem& sys, const Binding& binding) {
    if (!sys.is_proper()) {
        throw ImproperSystem("state-space form requires m <= n");
    }
    auto values = binding.as_double_map();
    std::vector<double> alpha;
    alpha.reserve(sys.alpha().size());
    for (const auto& c : sys.alpha()) alpha.push_back(c.eval(values));
    std::vector<double> beta;
    beta.reserve(sys.beta().size());
    for (const auto& c : sys.beta()) beta.push_back(c.eval(values));

    double an = alpha.back();
    if (an == 0.0) {
        throw SingularLeadingCoefficient("alpha_n evaluates to zero under the binding");
    }
    size_t n = alpha.size() - 1;

    StateSpace ss;
    ss.A.assign(n, std::vector<double>(n, 0.0));
    ss.B.assign(n, 0.0);
    ss.C.assign(n, 0.0);

    std::vector<double> a(n);  // normalized alpha_k / alpha_n
    for (size_t k = 0; k < n; ++k) a[k] = alpha[k] / an;
    std::vector<double> b(n + 1, 0.0);  // normalized beta
    for (size_t k = 0; k < beta.size(); ++k) b[k] = beta[k] / an;

    if (n == 0) {
        ss.D = b[0];
        return ss;
    }
    for (size_t i = 0; i + 1 < n; ++i) ss.A[i][i + 1] = 1.0;
    for (size_t k = 0; k < n; ++k) ss.A[n - 1][k] = -a[k];
    ss.B[n - 1] = 1.0;
    ss.D = b[n];
    for (size_t k = 0; k < n; ++k) ss.C[k] = b[k] - b[n] * a[k];
    return ss;
}

InputSignal InputSignal::step() { return {}; }

InputSignal InputSignal::impulse_approx() {
    InputSignal in;
    in.kind_ = Kind::ImpulseApprox;
    return in;
}

InputSignal InputSignal::sine(double w) {
    InputSignal in;
    in.kind_ = Kind::Sine;
    in.w_ = w;
    return in;
}

InputSignal InputSignal::custom(std::vector<double> samples) {
    InputSignal in;
    in.kind_ = Kind::Custom;
    in.samples_ = std::move(samples);
    return in;
}

double InputSignal::value(double t, double dt) const {
    switch (kind_) {
        case Kind::Step: return t >= 0.0 ? 1.0 : 0.0;
        case Kind::ImpulseApprox: return (t >= 0.0 && t < dt) ? 1.0 / dt : 0.0;
        case Kind::Sine: return t >= 0.0 ? std::sin(w_ * t) : 0.0;
        case Kind::Custom: {
            if (t < 0.0 || samples_.empty()) return 0.0;
            double idx = t / dt;
            auto lo = static_cast<size_t>(idx);
            if (lo + 1 >= samples_.size()) {
                return lo < samples_.size() ? samples_[lo] : 0.0;
            }
            double frac = idx - static_cast<double>(lo);
            return samples_[lo] + frac * (samples_[lo + 1] - samples_[lo]);
        }
    }
    return 0.0;
}

namespace {

void deriv_state(const StateSpace& ss, const std::vector<double>& x, double u,
                 std::vector<double>& dx) {
    size_t n = ss.order();
    for (size_t i = 0; i < n; ++i) {
        double acc = ss.B[i] * u;
        const auto& row = ss.A[i];
        for (size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        dx[i] = acc;
    }
}

double output_of(const StateSpace& ss, const std::vector<double>& x, double u) {
    double y = ss.D * u;
    for (size_t j = 0; j < ss.order(); ++j) y += ss.C[j] * x[j];
    return y;
}

}  // namespace

TimeSeries simulate(const OdeSystem& sys, const Binding& binding, const InputSignal& input,
                    double dt, double T) {
    if (dt <= 0.0 || T < dt) {
        throw InvalidArgument("simulation requires dt > 0 and T >= dt");
    }
    StateSpace ss = StateSpace::from_ode(sys, binding);
    size_t n = ss.order();
    auto steps = static_cast<size_t>(std::llround(T / dt));

    std::vector<double> x(n, 0.0);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    TimeSeries out;
    out.dt = dt;
    out.samples.reserve(steps + 1);
    out.samples.push_back(output_of(ss, x, input.value(0.0, dt)));

    for (size_t step = 0; step < steps; ++step) {
        double t = static_cast<double>(step) * dt;
        double u0 = input.value(t, dt);
        double um = input.value(t + 0.5 * dt, dt);
        double u1 = input.value(t + dt, dt);

        deriv_state(ss, x, u0, k1);
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        deriv_state(ss, tmp, um, k2);
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        deriv_state(ss, tmp, um, k3);
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
        deriv_state(ss, tmp, u1, k4);
        for (size_t i = 0; i < n; ++i) {
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        out.samples.push_back(output_of(ss, x, u1));
    }
    return out;
}

std::complex<double> series_laplace(const TimeSeries& series, std::complex<double> s) {
    const auto& y = series.samples;
    if (y.size() < 3) {
        throw InvalidArgument("series too short for quadrature");
    }
    double dt = series.dt;
    // composite Simpson needs an even panel count; fold the last interval
    // into a trapezoid when it is odd
    size_t panels = y.size() - 1;
    size_t simpson_panels = panels % 2 == 0 ? panels : panels - 1;

    auto g = [&](size_t k) {
        double t = static_cast<double>(k) * dt;
        return y[k] * std::exp(-s * t);
    };

    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k + 2 <= simpson_panels; k += 2) {
        acc += dt / 3.0 * (g(k) + 4.0 * g(k + 1) + g(k + 2));
    }
    if (simpson_panels != panels) {
        acc += dt / 2.0 * (g(panels - 1) + g(panels));
    }
    // tail: treat y as constant past T
    double T = series.duration();
    acc += y.back() * std::exp(-s * T) / s;
    return acc;
}

OracleReport oracle_check_tf(const OdeSystem& sys, const TransferFunction& tf,
                             const Binding& binding,
                             const std::vector<std::complex<double>>& s_samples, double dt,
                             double T) {
    TimeSeries y = simulate(sys, binding, InputSignal::step(), dt, T);
    TimeSeries u;
    u.dt = dt;
    u.samples.assign(y.samples.size(), 1.0);

    OracleReport report;
    for (auto s : s_samples) {
        if (s.real() <= 0.0) {
            throw ConvergenceMargin("oracle samples need Re s > 0");
        }
        std::complex<double> yhat = series_laplace(y, s);
        std::complex<double> xhat = series_laplace(u, s);
        std::complex<double> measured = yhat / xhat;
        std::complex<double> expected = tf_eval(tf, binding, s);
        double denom = std::max(std::abs(measured), 1e-300);
        double rel = std::abs(measured - expected) / denom;
        report.samples.push_back({s, expected, measured, rel});
        report.max_rel_error = std::max(report.max_rel_error, rel);
    }
    return report;
}

nlohmann::ordered_json ode_to_json(const OdeSystem& sys) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json alpha = nlohmann::ordered_json::array();
    for (const auto& c : sys.alpha()) alpha.push_back(param_poly_to_json(c));
    nlohmann::ordered_json beta = nlohmann::ordered_json::array();
    for (const auto& c : sys.beta()) beta.push_back(param_poly_to_json(c));
    j["alpha"] = alpha;
    j["beta"] = beta;
    return j;
}

OdeSystem ode_from_json(const nlohmann::json& j) {
    std::vector<ParamPoly> alpha;
    for (const auto& c : j.at("alpha")) alpha.push_back(param_poly_from_json(c));
    std::vector<ParamPoly> beta;
    for (const auto& c : j.at("beta")) beta.push_back(param_poly_from_json(c));
    if (beta.size() > alpha.size()) {
        return OdeSystem::improper(std::move(alpha), std::move(beta));
    }
    return {std::move(alpha), std::move(beta)};
}

void write_timeseries_csv(std::ostream& os, const TimeSeries& series) {
    os << "t,y\n";
    os.precision(17);
    for (size_t k = 0; k < series.samples.size(); ++k) {
        os << static_cast<double>(k) * series.dt << "," << series.samples[k] << "\n";
    }
}

}  // namespace lctk
