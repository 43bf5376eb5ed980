#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lctk/laplace.hpp"
#include "lctk/margins.hpp"
#include "lctk/mna.hpp"
#include "lctk/realizations.hpp"
#include "lctk/tf_io.hpp"
#include "lctk/ufss.hpp"

namespace lctk::cli {

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string fmt6(std::complex<double> z) {
    std::string s = fmt6(z.real());
    s += z.imag() < 0.0 ? "-" : "+";
    s += fmt6(std::abs(z.imag()));
    s += "j";
    return s;
}

std::complex<double> parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw SyntaxError("empty complex literal");
    char tail = s.back();
    if (tail != 'j' && tail != 'i') {
        return {std::stod(s), 0.0};
    }
    s.pop_back();
    // find the sign splitting real and imaginary parts (not an exponent sign)
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            double re = std::stod(s.substr(0, i));
            std::string imag = s.substr(i);
            double im = imag == "+" ? 1.0 : imag == "-" ? -1.0 : std::stod(imag);
            return {re, im};
        }
    }
    double im = s.empty() || s == "+" ? 1.0 : s == "-" ? -1.0 : std::stod(s);
    return {0.0, im};
}

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream file(arg);
    if (file) {
        std::ostringstream os;
        os << file.rdbuf();
        return os.str();
    }
    return arg;  // inline content
}

Binding make_binding(const std::vector<std::string>& binds) {
    std::map<std::string, double> values;
    for (const auto& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CLI::ValidationError("--bind expects NAME=VALUE, got '" + b + "'");
        }
        values[b.substr(0, eq)] = Rational::parse(b.substr(eq + 1)).to_double();
    }
    return Binding::approx(values);
}

// unbound parameters in a numeric subcommand are usage errors
void require_bound(const std::set<std::string>& free_params, const Binding& binding) {
    auto missing = binding.missing(free_params);
    if (missing.empty()) return;
    std::string list;
    for (const auto& name : missing) {
        if (!list.empty()) list += " ";
        list += name;
    }
    throw CLI::ValidationError("missing bindings: " + list + " (use --bind NAME=VALUE)");
}

int default_ppd() {
    if (const char* env = std::getenv("LCTK_SWEEP_PPD")) {
        int v = std::atoi(env);
        if (v >= 10) return v;
    }
    return 200;
}

std::map<std::string, ParamPoly> parse_component_params(const std::vector<std::string>& kv) {
    std::map<std::string, ParamPoly> params;
    for (const auto& item : kv) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CLI::ValidationError("component parameters expect NAME=VALUE, got '" + item +
                                       "'");
        }
        params[item.substr(0, eq)] = ParamPoly(Rational::parse(item.substr(eq + 1)));
    }
    return params;
}

struct Options {
    // laplace
    std::string laplace_expr;
    std::string laplace_check;

    // tf from-ode / from-netlist
    std::string ode_input;
    std::string netlist_input;
    bool want_trace = false;
    std::string tf_format = "text";

    // bode / margins
    std::string bode_tf;
    std::string margins_g;
    std::string margins_h = "1";
    double wmin = 1e-3;
    double wmax = 1e3;
    int ppd = default_ppd();
    std::vector<std::string> binds;

    // verify
    std::string verify_ode;
    std::string verify_tf;
    double threshold = 1e-2;
    std::vector<std::string> samples{"1", "2", "1+1j"};

    // case ufss
    std::string k1;
    std::string k2;
    bool with_margins = false;

    // realize
    std::string realize_what;
    std::string realize_kind;
    std::string realization = "active";
    std::vector<std::string> component_params;
};

// expressions whose derivative nodes carry initial values opt in to the
// explicit policy; everything else is the zero-init setting
bool any_deriv_iv(const TimeExpr& f) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, DerivNode>) {
                return !node.iv.empty() || any_deriv_iv(*node.f);
            } else if constexpr (std::is_same_v<T, AddNode>) {
                return any_deriv_iv(*node.f) || any_deriv_iv(*node.g);
            } else if constexpr (std::is_same_v<T, ScaleNode> || std::is_same_v<T, ExpMulNode> ||
                                 std::is_same_v<T, ShiftRightNode> ||
                                 std::is_same_v<T, TimeScaleNode> ||
                                 std::is_same_v<T, ModCosNode> || std::is_same_v<T, ModSinNode> ||
                                 std::is_same_v<T, IntegNode>) {
                return any_deriv_iv(*node.f);
            } else {
                return false;
            }
        },
        f.node());
}

int run_laplace(const Options& opt, std::ostream& out) {
    TimeExprPtr expr = time_expr_from_sexpr(opt.laplace_expr);
    IvPolicy policy = any_deriv_iv(*expr) ? IvPolicy::Explicit : IvPolicy::ZeroInit;
    LaplaceResult result = laplace_symbolic(*expr, policy);
    out << result.tf.to_string() << "  ROC: Re s > " << fmt6(result.roc) << "\n";
    if (!opt.laplace_check.empty()) {
        std::complex<double> s = parse_complex(opt.laplace_check);
        std::complex<double> numeric = laplace_numeric(*expr, s, 1e-8);
        std::complex<double> symbolic = tf_eval(result.tf, Binding{}, s);
        out << "oracle check at s = " << fmt6(s) << ": symbolic = " << fmt6(symbolic)
            << ", numeric = " << fmt6(numeric) << ", |diff| = " << fmt6(std::abs(symbolic - numeric))
            << "\n";
    }
    return 0;
}

int run_tf_from_ode(const Options& opt, std::ostream& out) {
    auto j = nlohmann::json::parse(read_input(opt.ode_input));
    OdeSystem sys = ode_from_json(j);
    TransferFunction tf = transfer_function(sys);
    if (opt.tf_format == "json") {
        out << tf_to_json(tf).dump(2) << "\n";
    } else {
        out << tf.to_string() << "\n";
    }
    return 0;
}

int run_tf_from_netlist(const Options& opt, std::ostream& out) {
    Netlist net = parse_netlist(read_input(opt.netlist_input));
    auto [tf, trace] = netlist_tf(net);
    if (opt.tf_format == "json") {
        out << tf_to_json(tf).dump(2) << "\n";
    } else {
        out << tf.to_string() << "\n";
    }
    if (opt.want_trace) {
        out << trace.text();
    }
    return 0;
}

int run_bode(const Options& opt, std::ostream& out) {
    TransferFunction tf = tf_from_text(opt.bode_tf);
    Binding binding = make_binding(opt.binds);
    require_bound(tf.free_params(), binding);
    auto sweep = bode_sweep(tf, binding, opt.wmin, opt.wmax, opt.ppd);
    write_bode_csv(out, sweep);
    return 0;
}

int run_margins(const Options& opt, std::ostream& out) {
    TransferFunction g = tf_from_text(opt.margins_g);
    TransferFunction h = tf_from_text(opt.margins_h);
    Binding binding = make_binding(opt.binds);
    std::set<std::string> params = g.free_params();
    h.collect_params(params);
    require_bound(params, binding);
    MarginReport report = margin_report(g, h, binding, {opt.wmin, opt.wmax, opt.ppd});
    out << margin_report_to_json(report).dump(2) << "\n";
    return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
    auto j = nlohmann::json::parse(read_input(opt.verify_ode));
    OdeSystem sys = ode_from_json(j);
    TransferFunction tf = tf_from_text(opt.verify_tf);
    Binding binding = make_binding(opt.binds);
    std::set<std::string> params = sys.free_params();
    tf.collect_params(params);
    require_bound(params, binding);

    std::vector<std::complex<double>> samples;
    samples.reserve(opt.samples.size());
    for (const auto& s : opt.samples) samples.push_back(parse_complex(s));

    OracleReport report = oracle_check_tf(sys, tf, binding, samples);
    for (const auto& sample : report.samples) {
        out << "s = " << fmt6(sample.s) << ": expected = " << fmt6(sample.expected)
            << ", measured = " << fmt6(sample.measured)
            << ", rel_err = " << fmt6(sample.rel_error) << "\n";
    }
    bool pass = report.pass(opt.threshold);
    out << "max_rel_err = " << fmt6(report.max_rel_error) << " threshold = "
        << fmt6(opt.threshold) << " => " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_case_ufss(const Options& opt, std::ostream& out) {
    UfssParams params = UfssParams::numeric(Rational::parse(opt.k1), Rational::parse(opt.k2));
    TransferFunction tf = ufss_pitch_tf(params);
    out << "theta(s)/theta_e(s) = " << tf.to_string() << "\n";
    out << tf_to_json(tf).dump(2) << "\n";
    if (opt.with_margins) {
        Binding binding;
        TransferFunction unity = TransferFunction::one();
        out << "open-loop margins:\n";
        out << margin_report_to_json(margin_report(tf, unity, binding)).dump(2) << "\n";
        out << "closed-loop margins:\n";
        TransferFunction closed = tf_feedback(tf, unity);
        out << margin_report_to_json(margin_report(closed, unity, binding)).dump(2) << "\n";
    }
    return 0;
}

int run_realize(const Options& opt, std::ostream& out) {
    auto params = parse_component_params(opt.component_params);
    std::string kind = opt.realize_kind;
    std::transform(kind.begin(), kind.end(), kind.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    Netlist net = [&]() -> Netlist {
        if (opt.realize_what == "controller") {
            static const std::map<std::string, ControllerKind> kinds{
                {"p", ControllerKind::P},   {"i", ControllerKind::I},
                {"d", ControllerKind::D},   {"pi", ControllerKind::PI},
                {"pd", ControllerKind::PD}, {"pid", ControllerKind::PID},
            };
            auto it = kinds.find(kind);
            if (it == kinds.end()) {
                throw CLI::ValidationError("unknown controller kind '" + opt.realize_kind + "'");
            }
            return realize_controller(it->second, params);
        }
        static const std::map<std::string, CompensatorKind> kinds{
            {"lag", CompensatorKind::Lag},
            {"lead", CompensatorKind::Lead},
            {"laglead", CompensatorKind::LagLead},
        };
        auto it = kinds.find(kind);
        if (it == kinds.end()) {
            throw CLI::ValidationError("unknown compensator kind '" + opt.realize_kind + "'");
        }
        Realization realization =
            opt.realization == "passive" ? Realization::Passive : Realization::Active;
        return realize_compensator(it->second, realization, params);
    }();
    out << net.to_text();
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lctk - transfer-function derivation and frequency-domain analysis"};
    app.require_subcommand(1);
    Options opt;

    auto* laplace_cmd =
        app.add_subcommand("laplace", "Symbolic Laplace transform of a time expression");
    laplace_cmd->add_option("expr", opt.laplace_expr, "s-expression, e.g. \"(exp -1)\"")
        ->required();
    laplace_cmd->add_option("--check", opt.laplace_check,
                            "compare against the quadrature oracle at this s");

    auto* tf_cmd = app.add_subcommand("tf", "Derive transfer functions");
    tf_cmd->require_subcommand(1);
    auto* from_ode = tf_cmd->add_subcommand("from-ode", "From ODE coefficients (JSON)");
    from_ode->add_option("input", opt.ode_input, "JSON file, inline JSON, or - for stdin")
        ->required();
    from_ode->add_option("--format", opt.tf_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    auto* from_net = tf_cmd->add_subcommand("from-netlist", "From a circuit netlist");
    from_net->add_option("input", opt.netlist_input, "netlist file or - for stdin")->required();
    from_net->add_flag("--trace", opt.want_trace, "print the derivation trace");
    from_net->add_option("--format", opt.tf_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* bode_cmd = app.add_subcommand("bode", "Frequency sweep as CSV");
    bode_cmd->add_option("tf", opt.bode_tf, "transfer function, e.g. \"1/(s*(s+1))\"")
        ->required();
    bode_cmd->add_option("--wmin", opt.wmin, "sweep start, rad/s");
    bode_cmd->add_option("--wmax", opt.wmax, "sweep end, rad/s");
    bode_cmd->add_option("--ppd", opt.ppd, "points per decade");
    bode_cmd->add_option("--bind", opt.binds, "parameter binding NAME=VALUE");

    auto* margins_cmd = app.add_subcommand("margins", "Margin report as JSON");
    margins_cmd->set_help_flag("--help", "print help");  // frees --h for the feedback path
    margins_cmd->add_option("g", opt.margins_g, "forward-path transfer function")->required();
    margins_cmd->add_option("--h", opt.margins_h, "feedback-path transfer function (default 1)");
    margins_cmd->add_option("--wmin", opt.wmin, "sweep start, rad/s");
    margins_cmd->add_option("--wmax", opt.wmax, "sweep end, rad/s");
    margins_cmd->add_option("--ppd", opt.ppd, "points per decade");
    margins_cmd->add_option("--bind", opt.binds, "parameter binding NAME=VALUE");

    auto* verify_cmd =
        app.add_subcommand("verify", "Check a transfer function against the simulation oracle");
    verify_cmd->add_option("ode", opt.verify_ode, "ODE coefficients (JSON)")->required();
    verify_cmd->add_option("--tf", opt.verify_tf, "candidate transfer function")->required();
    verify_cmd->add_option("--threshold", opt.threshold, "max relative error (default 1e-2)");
    verify_cmd->add_option("--sample", opt.samples, "s sample (repeatable; default 1 2 1+1j)");
    verify_cmd->add_option("--bind", opt.binds, "parameter binding NAME=VALUE");

    auto* case_cmd = app.add_subcommand("case", "Built-in case studies");
    case_cmd->require_subcommand(1);
    auto* ufss_cmd = case_cmd->add_subcommand("ufss", "Submersible pitch control");
    ufss_cmd->add_option("--k1", opt.k1, "pitch gain")->required();
    ufss_cmd->add_option("--k2", opt.k2, "pitch rate sensor gain")->required();
    ufss_cmd->add_flag("--margins", opt.with_margins,
                       "report open- and closed-loop margin analyses");

    auto* realize_cmd = app.add_subcommand("realize", "Emit a controller/compensator netlist");
    realize_cmd->add_option("what", opt.realize_what, "controller|compensator")
        ->required()
        ->check(CLI::IsMember({"controller", "compensator"}));
    realize_cmd->add_option("kind", opt.realize_kind, "P|I|D|PI|PD|PID or lag|lead|laglead")
        ->required();
    realize_cmd->add_option("--realization", opt.realization, "active|passive")
        ->check(CLI::IsMember({"active", "passive"}));
    realize_cmd->add_option("params", opt.component_params, "component values NAME=VALUE");

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes reversed argv
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (laplace_cmd->parsed()) return run_laplace(opt, out);
        if (from_ode->parsed()) return run_tf_from_ode(opt, out);
        if (from_net->parsed()) return run_tf_from_netlist(opt, out);
        if (bode_cmd->parsed()) return run_bode(opt, out);
        if (margins_cmd->parsed()) return run_margins(opt, out);
        if (verify_cmd->parsed()) return run_verify(opt, out);
        if (ufss_cmd->parsed()) return run_case_ufss(opt, out);
        if (realize_cmd->parsed()) return run_realize(opt, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: SyntaxError: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lctk::cli
