#pragma once

// Symbolic nodal analysis: KCL equations with admittances R -> 1/R (rows are
// cleared of resistive denominators), C -> C*s, ideal op-amps as nullor
// stamps (virtual short replaces the KCL equation at the op-amp output).
// The linear system is solved by Cramer's rule with fraction-free
// Bareiss elimination over SPoly entries.

#include <string>
#include <vector>

#include "lctk/netlist.hpp"
#include "lctk/spoly.hpp"
#include "lctk/transfer_function.hpp"

namespace lctk {

struct TraceStep {
    size_t stage;      // elimination stage k
    size_t pivot_row;  // row swapped into position k (== k means no swap)
};

/// Complete audit trail of a nodal derivation: the assembled equations, the
/// cleared matrix/rhs, and the pivot order of both determinant eliminations.
/// Replaying the trace reproduces the returned transfer function.
struct DerivationTrace {
    std::vector<std::string> equations;      // one line per assembled row
    std::vector<std::string> unknowns;       // column node names
    std::vector<std::vector<SPoly>> matrix;  // cleared KCL system M
    std::vector<SPoly> rhs;                  // right-hand side (Vin = 1)
    size_t out_col = SIZE_MAX;               // column of the output node
    std::vector<TraceStep> den_steps;        // pivots of det(M)
    std::vector<TraceStep> num_steps;        // pivots of det(M with out col := rhs)

    [[nodiscard]] std::string text() const;
};

std::pair<TransferFunction, DerivationTrace> netlist_tf(const Netlist& net);

/// Re-executes the recorded elimination on the recorded system.
TransferFunction replay_trace(const DerivationTrace& trace);

}  // namespace lctk
