#pragma once

// R/C/ideal-op-amp netlists with designated input and output nodes.
//
// File grammar (one element per line, '#' starts a comment):
//   R <name> <n1> <n2> <value|param>
//   C <name> <n1> <n2> <value|param>
//   OPAMP <name> <n+> <n-> <nout>
//   VIN <node>
//   VOUT <node>
//   GND <node>
// Values are exact decimal literals (1000, 1e-6), exact fractions (1/3), or
// parameter identifiers. The ground node is `gnd`; GND lines alias another
// node name to it. `L` lines are reserved and rejected.

#include <string>
#include <string_view>
#include <vector>

#include "lctk/param_poly.hpp"

namespace lctk {

struct Component {
    enum class Kind { Resistor, Capacitor, OpAmp };

    Kind kind;
    std::string name;
    std::vector<std::string> terminals;  // R/C: {n1, n2}; OpAmp: {in+, in-, out}
    ParamPoly value;                     // R in ohms / C in farads; unused for OpAmp

    bool operator==(const Component& rhs) const = default;
};

class Netlist {
public:
    Netlist(std::vector<Component> components, std::string input_node, std::string output_node);

    [[nodiscard]] const std::vector<Component>& components() const { return components_; }
    [[nodiscard]] const std::string& input_node() const { return input_node_; }
    [[nodiscard]] const std::string& output_node() const { return output_node_; }
    /// Sorted unique node names (including gnd).
    [[nodiscard]] const std::vector<std::string>& nodes() const { return nodes_; }

    [[nodiscard]] std::set<std::string> free_params() const;

    /// Reprint in the file grammar; parse(to_text()) reproduces the netlist.
    [[nodiscard]] std::string to_text() const;

    bool operator==(const Netlist& rhs) const {
        return components_ == rhs.components_ && input_node_ == rhs.input_node_ &&
               output_node_ == rhs.output_node_;
    }

private:
    void validate() const;
    std::vector<Component> components_;
    std::string input_node_;
    std::string output_node_;
    std::vector<std::string> nodes_;
};

Netlist parse_netlist(std::string_view text);

}  // namespace lctk
