#include "lctk/margins.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace lctk {

namespace {

constexpr double kPi = 3.14159265358979323846;

double principal_arg_deg(std::complex<double> z) { return std::arg(z) * 180.0 / kPi; }

double mag_db_of(std::complex<double> z) { return 20.0 * std::log10(std::abs(z)); }

/// unwrap `raw` onto the branch nearest to `reference`
double unwrap_to(double raw, double reference) {
    return raw - 360.0 * std::round((raw - reference) / 360.0);
}

}  // namespace

std::vector<FreqPoint> bode_sweep(const TransferFunction& tf, const Binding& binding,
                                  double wmin, double wmax, int ppd,
                                  std::vector<double>* dropped) {
    if (!(0.0 < wmin && wmin < wmax)) {
        throw InvalidArgument("sweep requires 0 < wmin < wmax");
    }
    if (ppd < 10) {
        throw InvalidArgument("sweep requires at least 10 points per decade");
    }
    double lmin = std::log10(wmin);
    double lmax = std::log10(wmax);
    auto intervals = static_cast<size_t>(std::ceil((lmax - lmin) * ppd - 1e-9));
    intervals = std::max<size_t>(intervals, 1);

    std::vector<FreqPoint> sweep;
    sweep.reserve(intervals + 1);
    bool have_prev = false;
    double prev_phase = 0.0;
    for (size_t i = 0; i <= intervals; ++i) {
        double w = i == intervals
                       ? wmax
                       : std::pow(10.0, lmin + static_cast<double>(i) * (lmax - lmin) /
                                                   static_cast<double>(intervals));
        std::complex<double> value;
        try {
            value = tf_eval(tf, binding, std::complex<double>(0.0, w));
        } catch (const PoleEvaluation&) {
            if (dropped != nullptr) dropped->push_back(w);
            continue;
        }
        double phase = principal_arg_deg(value);
        if (have_prev) {
            phase = unwrap_to(phase, prev_phase);
        }
        have_prev = true;
        prev_phase = phase;
        sweep.push_back({w, value, mag_db_of(value), phase});
    }
    return sweep;
}

namespace {

// bisection on a continuous scalar function of log-frequency
double refine_crossing(const std::function<double(double)>& f, double wlo, double whi, double flo) {
    for (int iter = 0; iter < 200; ++iter) {
        double wmid = std::sqrt(wlo * whi);  // midpoint in log space
        if ((whi - wlo) <= 1e-6 * wmid) return wmid;
        double fmid = f(wmid);
        if (fmid == 0.0) return wmid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            wlo = wmid;
            flo = fmid;
        } else {
            whi = wmid;
        }
    }
    return std::sqrt(wlo * whi);
}

}  // namespace

Crossovers find_crossovers(const std::vector<FreqPoint>& sweep,
                           const std::function<std::complex<double>(double)>& evaluate) {
    Crossovers out;
    auto push_unique = [](std::vector<double>& v, double w) {
        if (v.empty() || std::abs(v.back() - w) > 1e-9 * w) v.push_back(w);
    };

    for (size_t i = 0; i + 1 < sweep.size(); ++i) {
        const FreqPoint& a = sweep[i];
        const FreqPoint& b = sweep[i + 1];

        // gain: sign change of mag_db
        if (a.mag_db == 0.0) {
            push_unique(out.gain, a.w);
        } else if (std::isfinite(a.mag_db) && std::isfinite(b.mag_db) && a.mag_db * b.mag_db < 0.0) {
            auto f = [&](double w) { return mag_db_of(evaluate(w)); };
            push_unique(out.gain, refine_crossing(f, a.w, b.w, a.mag_db));
        }

        // phase: sign change of unwrapped phase + 180
        double pa = a.phase_deg + 180.0;
        double pb = b.phase_deg + 180.0;
        if (pa == 0.0) {
            push_unique(out.phase, a.w);
        } else if (pa * pb < 0.0) {
            double ref = a.phase_deg;
            auto f = [&, ref](double w) mutable {
                double ph = unwrap_to(principal_arg_deg(evaluate(w)), ref);
                ref = ph;
                return ph + 180.0;
            };
            push_unique(out.phase, refine_crossing(f, a.w, b.w, pa));
        }
    }
    if (!sweep.empty()) {
        const FreqPoint& last = sweep.back();
        if (last.mag_db == 0.0) push_unique(out.gain, last.w);
        if (last.phase_deg + 180.0 == 0.0) push_unique(out.phase, last.w);
    }
    return out;
}

Crossovers find_crossovers(const std::vector<FreqPoint>& sweep, const TransferFunction& tf,
                           const Binding& binding) {
    return find_crossovers(sweep, [&](double w) {
        return tf_eval(tf, binding, std::complex<double>(0.0, w));
    });
}

namespace {

struct LoopAnalysis {
    TransferFunction gh;
    std::vector<FreqPoint> sweep;
    Crossovers crossovers;
};

LoopAnalysis analyze(const TransferFunction& g, const TransferFunction& h,
                     const Binding& binding, const SweepRange& range) {
    LoopAnalysis la{tf_arith(TfOp::Mul, g, h), {}, {}};
    la.sweep = bode_sweep(la.gh, binding, range.wmin, range.wmax, range.ppd);
    la.crossovers = find_crossovers(la.sweep, la.gh, binding);
    return la;
}

}  // namespace

PhaseMarginResult phase_margin(const TransferFunction& g, const TransferFunction& h,
                               const Binding& binding, SweepRange range) {
    LoopAnalysis la = analyze(g, h, binding, range);
    if (la.crossovers.gain.empty()) {
        throw NoGainCrossover("|GH| does not cross 0 dB in the sweep range");
    }
    PhaseMarginResult best{std::numeric_limits<double>::infinity(), 0.0};
    for (double w : la.crossovers.gain) {
        std::complex<double> v = tf_eval(la.gh, binding, std::complex<double>(0.0, w));
        double pm = 180.0 + principal_arg_deg(v);
        if (pm < best.pm_deg) best = {pm, w};
    }
    return best;
}

GainMarginResult gain_margin_db(const TransferFunction& g, const TransferFunction& h,
                                const Binding& binding, SweepRange range) {
    LoopAnalysis la = analyze(g, h, binding, range);
    if (la.crossovers.phase.empty()) {
        throw NoPhaseCrossover("the phase of GH does not reach -180 deg in the sweep range");
    }
    GainMarginResult worst{-std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (double w : la.crossovers.phase) {
        std::complex<double> v = tf_eval(la.gh, binding, std::complex<double>(0.0, w));
        double gm = mag_db_of(v);
        if (gm > worst.gm_db_paper) worst = {gm, -gm, w};
    }
    return worst;
}

MarginReport margin_report(const TransferFunction& g, const TransferFunction& h,
                           const Binding& binding, SweepRange range) {
    LoopAnalysis la = analyze(g, h, binding, range);
    MarginReport report;
    report.gain_crossovers = la.crossovers.gain;
    report.phase_crossovers = la.crossovers.phase;

    for (double w : la.crossovers.gain) {
        std::complex<double> v = tf_eval(la.gh, binding, std::complex<double>(0.0, w));
        double pm = 180.0 + principal_arg_deg(v);
        if (!report.pm || pm < report.pm->pm_deg) report.pm = PhaseMarginResult{pm, w};
    }
    for (double w : la.crossovers.phase) {
        std::complex<double> v = tf_eval(la.gh, binding, std::complex<double>(0.0, w));
        double gm = mag_db_of(v);
        if (!report.gm || gm > report.gm->gm_db_paper) {
            report.gm = GainMarginResult{gm, -gm, w};
        }
    }
    if (g.is_delay_free() && h.is_delay_free()) {
        try {
            TransferFunction closed = tf_feedback(g, h);
            report.closed_loop = routh_stability(closed.den(), binding);
        } catch (const Error&) {
            // degenerate loop or unbound symbolic coefficients: no verdict
        }
    }
    return report;
}

nlohmann::ordered_json margin_report_to_json(const MarginReport& report) {
    nlohmann::ordered_json j;
    j["w_gc"] = report.gain_crossovers;
    j["w_pc"] = report.phase_crossovers;
    j["pm_deg"] = report.pm ? nlohmann::ordered_json(report.pm->pm_deg)
                            : nlohmann::ordered_json(nullptr);
    j["w_gc_at_pm"] = report.pm ? nlohmann::ordered_json(report.pm->w_gc)
                                : nlohmann::ordered_json(nullptr);
    j["gm_db_paper"] = report.gm ? nlohmann::ordered_json(report.gm->gm_db_paper)
                                 : nlohmann::ordered_json(nullptr);
    j["gm_db_conventional"] = report.gm ? nlohmann::ordered_json(report.gm->gm_db_conventional)
                                        : nlohmann::ordered_json(nullptr);
    j["w_pc_at_gm"] = report.gm ? nlohmann::ordered_json(report.gm->w_pc)
                                : nlohmann::ordered_json(nullptr);
    if (report.closed_loop) {
        j["stable_closed_loop"] = stability_verdict_name(report.closed_loop->verdict);
        j["routh_sign_changes"] = report.closed_loop->sign_changes;
    } else {
        j["stable_closed_loop"] = nullptr;
        j["routh_sign_changes"] = nullptr;
    }
    return j;
}

void write_bode_csv(std::ostream& os, const std::vector<FreqPoint>& sweep) {
    os << "w,re,im,mag_db,phase_deg\n";
    os.precision(17);
    for (const auto& p : sweep) {
        os << p.w << "," << p.value.real() << "," << p.value.imag() << "," << p.mag_db << ","
           << p.phase_deg << "\n";
    }
}

}  // namespace lctk
