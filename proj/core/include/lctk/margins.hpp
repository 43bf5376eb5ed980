#pragma once

// Frequency-domain stability metrics: log-spaced Bode sweeps with phase
// unwrapping, crossover root-finding by bisection, phase margin
// 180 + Arg(GH(j w_gc)), and the gain margin in both sign conventions:
// gm_db_paper = 20 log10 |GH(j w_pc)| (negative for stable loops) and its
// negation gm_db_conventional.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lctk/routh.hpp"
#include "lctk/transfer_function.hpp"

namespace lctk {

struct FreqPoint {
    double w;
    std::complex<double> value;
    double mag_db;
    double phase_deg;  // unwrapped along the sweep
};

struct SweepRange {
    double wmin = 1e-3;
    double wmax = 1e3;
    int ppd = 200;  // points per decade
};

/// Log-spaced evaluation at s = j w. Points landing on poles are dropped
/// (and recorded in `dropped` when given).
std::vector<FreqPoint> bode_sweep(const TransferFunction& tf, const Binding& binding,
                                  double wmin, double wmax, int ppd,
                                  std::vector<double>* dropped = nullptr);

struct Crossovers {
    std::vector<double> gain;   // |GH| = 0 dB
    std::vector<double> phase;  // unwrapped phase = -180 deg
};

/// Sign-change detection on the sweep, refined by bisection on the continuous
/// response to relative 1e-6. The evaluator supplies fresh points.
Crossovers find_crossovers(const std::vector<FreqPoint>& sweep,
                           const std::function<std::complex<double>(double)>& evaluate);
Crossovers find_crossovers(const std::vector<FreqPoint>& sweep, const TransferFunction& tf,
                           const Binding& binding);

struct PhaseMarginResult {
    double pm_deg;
    double w_gc;
};

struct GainMarginResult {
    double gm_db_paper;         // 20 log10 |GH(j w_pc)|
    double gm_db_conventional;  // its negation
    double w_pc;
};

/// Worst case over gain crossovers (minimum margin).
PhaseMarginResult phase_margin(const TransferFunction& g, const TransferFunction& h,
                               const Binding& binding, SweepRange range = {});

/// Worst case over phase crossovers (largest |GH|).
GainMarginResult gain_margin_db(const TransferFunction& g, const TransferFunction& h,
                                const Binding& binding, SweepRange range = {});

struct MarginReport {
    std::vector<double> gain_crossovers;
    std::vector<double> phase_crossovers;
    std::optional<PhaseMarginResult> pm;
    std::optional<GainMarginResult> gm;
    std::optional<RouthResult> closed_loop;  // Routh on the tf_feedback denominator
};

MarginReport margin_report(const TransferFunction& g, const TransferFunction& h,
                           const Binding& binding, SweepRange range = {});

nlohmann::ordered_json margin_report_to_json(const MarginReport& report);

/// CSV `w,re,im,mag_db,phase_deg`.
void write_bode_csv(std::ostream& os, const std::vector<FreqPoint>& sweep);

}  // namespace lctk
