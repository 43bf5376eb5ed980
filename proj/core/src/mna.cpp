#include "lctk/mna.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

// Fraction-free Bareiss elimination. In record mode the pivot order is
// chosen (first nonzero below the diagonal) and written to steps; in replay
// mode the recorded order is followed.
SPoly bareiss_det(std::vector<std::vector<SPoly>> m, std::vector<TraceStep>* record,
                  const std::vector<TraceStep>* follow) {
    size_t n = m.size();
    if (n == 0) return SPoly(1);
    SPoly prev(1);
    int sign = 1;
    size_t follow_idx = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        if (follow != nullptr) {
            if (follow_idx >= follow->size() || (*follow)[follow_idx].stage != k) {
                throw InvalidArgument("trace steps do not match the recorded system");
            }
            pivot = (*follow)[follow_idx++].pivot_row;
        } else {
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return {};  // structurally singular
        }
        if (pivot >= n || m[pivot][k].is_zero()) {
            return {};
        }
        if (record != nullptr) record->push_back({k, pivot});
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
            }
            m[i][k] = SPoly();
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<SPoly>> with_column(const std::vector<std::vector<SPoly>>& m,
                                            size_t col, const std::vector<SPoly>& b) {
    auto out = m;
    for (size_t i = 0; i < out.size(); ++i) out[i][col] = b[i];
    return out;
}

}  // namespace

std::string DerivationTrace::text() const {
    std::ostringstream os;
    os << "nodal equations:\n";
    for (const auto& eq : equations) os << "  " << eq << "\n";
    os << "unknowns:";
    for (const auto& u : unknowns) os << " V(" << u << ")";
    os << "\ncleared system (Vin = 1):\n";
    for (size_t i = 0; i < matrix.size(); ++i) {
        os << "  [";
        for (size_t j = 0; j < matrix[i].size(); ++j) {
            if (j > 0) os << " | ";
            os << matrix[i][j].to_string();
        }
        os << "] = " << rhs[i].to_string() << "\n";
    }
    auto dump_steps = [&os](const char* label, const std::vector<TraceStep>& steps) {
        os << label;
        for (const auto& s : steps) {
            os << " (k=" << s.stage << ",pivot=" << s.pivot_row << ")";
        }
        os << "\n";
    };
    dump_steps("denominator elimination:", den_steps);
    dump_steps("numerator elimination:", num_steps);
    return os.str();
}

std::pair<TransferFunction, DerivationTrace> netlist_tf(const Netlist& net) {
    const auto& comps = net.components();

    // op-amp output bookkeeping
    std::map<std::string, const Component*> opamp_at_output;
    for (const auto& c : comps) {
        if (c.kind != Component::Kind::OpAmp) continue;
        const std::string& out = c.terminals[2];
        if (out == "gnd" || out == net.input_node()) {
            throw UnsupportedTopology("op-amp '" + c.name + "' output conflicts with " + out);
        }
        if (!opamp_at_output.emplace(out, &c).second) {
            throw UnsupportedTopology("two op-amps drive node '" + out + "'");
        }
    }

    // unknown columns: non-ground nodes except the driven input, ascending
    std::vector<std::string> unknowns;
    for (const auto& n : net.nodes()) {
        if (n != "gnd" && n != net.input_node()) unknowns.push_back(n);
    }
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;

    DerivationTrace trace;
    trace.unknowns = unknowns;

    size_t n = unknowns.size();
    trace.matrix.assign(n, std::vector<SPoly>(n, SPoly()));
    trace.rhs.assign(n, SPoly());

    for (size_t row = 0; row < n; ++row) {
        const std::string& v = unknowns[row];
        std::map<std::string, SPoly> coeffs;  // node -> coefficient in this row
        std::ostringstream eq;

        auto op_it = opamp_at_output.find(v);
        if (op_it != opamp_at_output.end()) {
            // nullor stamp: the op-amp output row carries the virtual short
            const Component& oa = *op_it->second;
            const std::string& plus = oa.terminals[0];
            const std::string& minus = oa.terminals[1];
            coeffs[plus] += SPoly(1);
            coeffs[minus] -= SPoly(1);
            eq << "OPAMP " << oa.name << ": V(" << plus << ") = V(" << minus << ")";
        } else {
            // KCL: currents leaving v sum to zero; the row is multiplied by
            // the product of the resistances incident at v
            std::vector<const Component*> incident;
            for (const auto& c : comps) {
                if (c.kind == Component::Kind::OpAmp) continue;  // ideal inputs draw nothing
                if (c.terminals[0] == c.terminals[1]) continue;  // shorted element
                if (c.terminals[0] == v || c.terminals[1] == v) incident.push_back(&c);
            }
            ParamPoly r_product(Rational(1));
            for (const auto* c : incident) {
                if (c->kind == Component::Kind::Resistor) r_product *= c->value;
            }
            eq << "KCL @ " << v << ":";
            bool first = true;
            for (const auto* c : incident) {
                const std::string& other = c->terminals[0] == v ? c->terminals[1] : c->terminals[0];
                SPoly coefficient;
                if (c->kind == Component::Kind::Resistor) {
                    ParamPoly others(Rational(1));
                    for (const auto* o : incident) {
                        if (o != c && o->kind == Component::Kind::Resistor) others *= o->value;
                    }
                    coefficient = SPoly(others);
                    eq << (first ? " " : " + ") << "(V(" << v << ") - V(" << other << "))/"
                       << c->name;
                } else {
                    coefficient = SPoly::s_power(1, c->value * r_product);
                    eq << (first ? " " : " + ") << c->name << "*s*(V(" << v << ") - V(" << other
                       << "))";
                }
                first = false;
                coeffs[v] += coefficient;
                coeffs[other] -= coefficient;
            }
            eq << " = 0";
        }
        trace.equations.push_back(eq.str());

        for (auto& [node, coefficient] : coeffs) {
            if (coefficient.is_zero() || node == "gnd") continue;
            if (node == net.input_node()) {
                trace.rhs[row] -= coefficient;  // move the known Vin = 1 across
            } else {
                trace.matrix[row][col.at(node)] += coefficient;
            }
        }
    }

    // output grounded: the ratio is identically zero
    if (net.output_node() == "gnd") {
        trace.out_col = SIZE_MAX;
        SPoly den = bareiss_det(trace.matrix, &trace.den_steps, nullptr);
        if (den.is_zero()) {
            throw SingularCircuit("the nodal system is symbolically singular");
        }
        return {TransferFunction::zero(), std::move(trace)};
    }

    trace.out_col = col.at(net.output_node());
    SPoly den = bareiss_det(trace.matrix, &trace.den_steps, nullptr);
    if (den.is_zero()) {
        throw SingularCircuit("the nodal system is symbolically singular");
    }
    SPoly num = bareiss_det(with_column(trace.matrix, trace.out_col, trace.rhs),
                            &trace.num_steps, nullptr);
    return {TransferFunction(std::move(num), std::move(den)), std::move(trace)};
}

TransferFunction replay_trace(const DerivationTrace& trace) {
    SPoly den = bareiss_det(trace.matrix, nullptr, &trace.den_steps);
    if (den.is_zero()) {
        throw SingularCircuit("replayed system is singular");
    }
    if (trace.out_col == SIZE_MAX) {
        return TransferFunction::zero();
    }
    SPoly num = bareiss_det(with_column(trace.matrix, trace.out_col, trace.rhs), nullptr,
                            &trace.num_steps);
    return {std::move(num), std::move(den)};
}

}  // namespace lctk
