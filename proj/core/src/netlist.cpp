#include "lctk/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

// union-find over node names
struct NodeSets {
    std::map<std::string, std::string> parent;

    std::string find(const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        std::string root = find(it->second);
        parent[x] = root;
        return root;
    }

    void unite(const std::string& a, const std::string& b) { parent[find(a)] = find(b); }
};

}  // namespace

Netlist::Netlist(std::vector<Component> components, std::string input_node,
                 std::string output_node)
    : components_(std::move(components)),
      input_node_(std::move(input_node)),
      output_node_(std::move(output_node)) {
    std::set<std::string> node_set{input_node_, output_node_};
    for (const auto& c : components_) {
        for (const auto& t : c.terminals) node_set.insert(t);
    }
    nodes_.assign(node_set.begin(), node_set.end());
    validate();
}

void Netlist::validate() const {
    if (input_node_ == output_node_) {
        throw InvalidArgument("input and output nodes must differ");
    }
    if (input_node_ == "gnd") {
        throw UnsupportedTopology("the input source cannot drive gnd");
    }

    std::set<std::string> names;
    for (const auto& c : components_) {
        if (!names.insert(c.name).second) {
            throw DuplicateName("component name '" + c.name + "' appears twice");
        }
        size_t want = c.kind == Component::Kind::OpAmp ? 3 : 2;
        if (c.terminals.size() != want) {
            throw InvalidArgument("component '" + c.name + "' has the wrong terminal count");
        }
        if (c.kind != Component::Kind::OpAmp && c.value.is_zero()) {
            throw InvalidArgument("component '" + c.name + "' has an identically zero value");
        }
    }

    bool has_gnd = std::find(nodes_.begin(), nodes_.end(), "gnd") != nodes_.end();
    if (!has_gnd) {
        throw MissingGround("netlist has no gnd node");
    }

    // structural connectivity: components join their terminals
    NodeSets sets;
    for (const auto& n : nodes_) sets.find(n);
    for (const auto& c : components_) {
        for (size_t i = 1; i < c.terminals.size(); ++i) {
            sets.unite(c.terminals[0], c.terminals[i]);
        }
    }
    std::string root = sets.find(nodes_.front());
    for (const auto& n : nodes_) {
        if (sets.find(n) != root) {
            throw DisconnectedGraph("node '" + n + "' is not connected to the rest");
        }
    }

    // an op-amp output must feed something: the designated output or a component
    for (const auto& c : components_) {
        if (c.kind != Component::Kind::OpAmp) continue;
        const std::string& out = c.terminals[2];
        if (out == output_node_) continue;
        bool attached = false;
        for (const auto& other : components_) {
            if (&other == &c) continue;
            for (const auto& t : other.terminals) {
                if (t == out) attached = true;
            }
        }
        if (!attached) {
            throw UnsupportedTopology("op-amp '" + c.name + "' output node '" + out +
                                      "' drives nothing");
        }
    }
}

std::set<std::string> Netlist::free_params() const {
    std::set<std::string> out;
    for (const auto& c : components_) c.value.collect_params(out);
    return out;
}

namespace {

std::string value_text(const ParamPoly& value, const std::string& owner) {
    if (value.is_constant()) {
        return value.constant_value().to_string();
    }
    if (value.terms().size() == 1) {
        const auto& [mono, coef] = *value.terms().begin();
        if (coef.is_one() && mono.factors().size() == 1 && mono.factors()[0].second == 1) {
            return mono.factors()[0].first;
        }
    }
    throw SyntaxError("value of '" + owner +
                      "' is not representable in the netlist grammar (constant or parameter)");
}

}  // namespace

std::string Netlist::to_text() const {
    std::ostringstream os;
    for (const auto& c : components_) {
        switch (c.kind) {
            case Component::Kind::Resistor:
                os << "R " << c.name << " " << c.terminals[0] << " " << c.terminals[1] << " "
                   << value_text(c.value, c.name) << "\n";
                break;
            case Component::Kind::Capacitor:
                os << "C " << c.name << " " << c.terminals[0] << " " << c.terminals[1] << " "
                   << value_text(c.value, c.name) << "\n";
                break;
            case Component::Kind::OpAmp:
                os << "OPAMP " << c.name << " " << c.terminals[0] << " " << c.terminals[1] << " "
                   << c.terminals[2] << "\n";
                break;
        }
    }
    os << "VIN " << input_node_ << "\n";
    os << "VOUT " << output_node_ << "\n";
    return os.str();
}

Netlist parse_netlist(std::string_view text) {
    std::vector<Component> components;
    std::string input_node;
    std::string output_node;
    std::map<std::string, std::string> gnd_alias;

    std::istringstream stream{std::string(text)};
    std::string line;
    size_t line_no = 0;

    auto syntax_error = [&](const std::string& msg, size_t col = 0) -> SyntaxError {
        std::ostringstream os;
        os << msg << " (line " << line_no;
        if (col > 0) os << ", column " << col;
        os << ")";
        return SyntaxError(os.str());
    };

    while (std::getline(stream, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls{line};
        std::vector<std::string> tok;
        std::string word;
        while (ls >> word) tok.push_back(word);
        if (tok.empty()) continue;

        std::string head = tok[0];
        std::transform(head.begin(), head.end(), head.begin(),
                       [](unsigned char c) { return std::toupper(c); });

        if (head == "R" || head == "C") {
            if (tok.size() != 5) {
                throw syntax_error("expected: " + head + " <name> <n1> <n2> <value>");
            }
            ParamPoly value;
            if (is_identifier(tok[4])) {
                value = ParamPoly::var(tok[4]);
            } else {
                value = ParamPoly(Rational::parse(tok[4]));
            }
            components.push_back({head == "R" ? Component::Kind::Resistor
                                              : Component::Kind::Capacitor,
                                  tok[1],
                                  {tok[2], tok[3]},
                                  value});
        } else if (head == "OPAMP") {
            if (tok.size() != 5) {
                throw syntax_error("expected: OPAMP <name> <n+> <n-> <nout>");
            }
            components.push_back(
                {Component::Kind::OpAmp, tok[1], {tok[2], tok[3], tok[4]}, ParamPoly()});
        } else if (head == "VIN") {
            if (tok.size() != 2) throw syntax_error("expected: VIN <node>");
            input_node = tok[1];
        } else if (head == "VOUT") {
            if (tok.size() != 2) throw syntax_error("expected: VOUT <node>");
            output_node = tok[1];
        } else if (head == "GND") {
            if (tok.size() != 2) throw syntax_error("expected: GND <node>");
            gnd_alias[tok[1]] = "gnd";
        } else if (head == "L") {
            throw UnsupportedComponent("inductor lines are reserved but not supported (line " +
                                       std::to_string(line_no) + ")");
        } else {
            throw syntax_error("unknown element '" + tok[0] + "'");
        }
    }

    if (input_node.empty()) {
        throw SyntaxError("MissingInput: no VIN line");
    }
    if (output_node.empty()) {
        throw SyntaxError("MissingOutput: no VOUT line");
    }

    auto rename = [&](std::string& n) {
        auto it = gnd_alias.find(n);
        if (it != gnd_alias.end()) n = it->second;
    };
    for (auto& c : components) {
        for (auto& t : c.terminals) rename(t);
    }
    rename(input_node);
    rename(output_node);

    return {std::move(components), std::move(input_node), std::move(output_node)};
}

}  // namespace lctk
