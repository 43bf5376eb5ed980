#pragma once

// Generic n-order LTI systems: exact ODE-coefficient-to-transfer-function
// construction, frequency response, fixed-step time-domain simulation in
// controllable canonical form, and a simulation-based transfer-function
// oracle.

#include <complex>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "lctk/transfer_function.hpp"

namespace lctk {

/// sum alpha_k y^(k) = sum beta_k x^(k); alpha holds the output-side
/// coefficients (denominator), beta the input-side (numerator).
class OdeSystem {
public:
    /// Proper system: requires deg(beta) <= deg(alpha) and alpha_n not
    /// identically zero.
    OdeSystem(std::vector<ParamPoly> alpha, std::vector<ParamPoly> beta);

    /// Behavioral controller models may be improper (numerator order above
    /// denominator order); everything but state-space simulation accepts them.
    static OdeSystem improper(std::vector<ParamPoly> alpha, std::vector<ParamPoly> beta);

    [[nodiscard]] const std::vector<ParamPoly>& alpha() const { return alpha_; }
    [[nodiscard]] const std::vector<ParamPoly>& beta() const { return beta_; }
    [[nodiscard]] size_t order() const { return alpha_.size() - 1; }
    [[nodiscard]] bool is_proper() const { return beta_.size() <= alpha_.size(); }

    [[nodiscard]] std::set<std::string> free_params() const;

private:
    OdeSystem() = default;
    std::vector<ParamPoly> alpha_;
    std::vector<ParamPoly> beta_;
};

/// (sum beta_k s^k) / (sum alpha_k s^k), exact, delay 0. Assumes zero
/// initial conditions (recorded assumption, not a runtime check).
TransferFunction transfer_function(const OdeSystem& sys);

/// Transfer function evaluated at s = j w under the binding.
std::complex<double> frequency_response_sys(const OdeSystem& sys, const Binding& binding,
                                            double w);

/// Controllable canonical form with the binding applied.
struct StateSpace {
    std::vector<std::vector<double>> A;  // n x n
    std::vector<double> B;               // n
    std::vector<double> C;               // n
    double D = 0.0;

    static StateSpace from_ode(const OdeSystem& sys, const Binding& binding);
    [[nodiscard]] size_t order() const { return A.size(); }
};

struct TimeSeries {
    double dt = 0.0;
    std::vector<double> samples;  // value at t = k*dt, starting at t = 0

    [[nodiscard]] double duration() const {
        return dt * static_cast<double>(samples.empty() ? 0 : samples.size() - 1);
    }
};

class InputSignal {
public:
    enum class Kind { Step, ImpulseApprox, Sine, Custom };

    static InputSignal step();
    /// Width-dt, height-1/dt pulse.
    static InputSignal impulse_approx();
    static InputSignal sine(double w);
    /// Samples at the simulation grid; linear interpolation in between,
    /// zero beyond the last sample.
    static InputSignal custom(std::vector<double> samples);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double value(double t, double dt) const;

private:
    Kind kind_ = Kind::Step;
    double w_ = 0.0;
    std::vector<double> samples_;
};

/// Classical fixed-step 4th-order integration from the zero state.
TimeSeries simulate(const OdeSystem& sys, const Binding& binding, const InputSignal& input,
                    double dt, double T);

struct OracleSample {
    std::complex<double> s;
    std::complex<double> expected;  // tf_eval of the candidate transfer function
    std::complex<double> measured;  // Y_hat(s) / X_hat(s) from simulation
    double rel_error;
};

struct OracleReport {
    std::vector<OracleSample> samples;
    double max_rel_error = 0.0;

    [[nodiscard]] bool pass(double threshold) const { return max_rel_error <= threshold; }
};

/// Simulates the step response, computes the numeric Laplace transform of
/// input and output by quadrature over the sampled series, and compares
/// Y_hat/X_hat against the candidate transfer function at each s sample.
OracleReport oracle_check_tf(const OdeSystem& sys, const TransferFunction& tf,
                             const Binding& binding,
                             const std::vector<std::complex<double>>& s_samples,
                             double dt = 1e-3, double T = 40.0);

/// Numeric Laplace transform of a uniformly sampled series: Simpson on the
/// grid plus a constant-tail correction y_T e^{-sT}/s.
std::complex<double> series_laplace(const TimeSeries& series, std::complex<double> s);

nlohmann::ordered_json ode_to_json(const OdeSystem& sys);
OdeSystem ode_from_json(const nlohmann::json& j);

/// Two-column CSV "t,y".
void write_timeseries_csv(std::ostream& os, const TimeSeries& series);

}  // namespace lctk
