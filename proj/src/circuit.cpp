#include "hetec/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hetec {

std::string gate_name(GateKind k)
{
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::CX: return "cx";
        case GateKind::MeasureZ: return "measure";
    }
    return "?";
}

size_t LogicalCircuit::t_count() const
{
    size_t n = 0;
    for (const auto& g : gates)
        if (g.kind == GateKind::T || g.kind == GateKind::Tdg)
            ++n;
    return n;
}

void validate(const LogicalCircuit& c)
{
    std::vector<bool> measured(c.width, false);
    for (const auto& g : c.gates) {
        size_t arity = g.kind == GateKind::CX ? 2 : 1;
        if (g.qubits.size() != arity)
            throw std::invalid_argument("gate " + gate_name(g.kind) + " has wrong arity");
        if (arity == 2 && g.qubits[0] == g.qubits[1])
            throw std::invalid_argument("cx with identical qubits");
        for (uint32_t q : g.qubits) {
            if (q >= c.width)
                throw std::invalid_argument("qubit index " + std::to_string(q) +
                                            " out of range for width " + std::to_string(c.width));
            if (measured[q])
                throw std::invalid_argument("operation on qubit " + std::to_string(q) +
                                            " after its measurement");
        }
        if (g.kind == GateKind::MeasureZ)
            measured[g.qubits[0]] = true;
    }
}

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("qasm:" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      line(line),
      col(col)
{
}

UnsupportedGateError::UnsupportedGateError(const std::string& gate, int line, int col)
    : std::runtime_error("qasm:" + std::to_string(line) + ":" + std::to_string(col) +
                         ": unsupported gate '" + gate + "'"),
      gate(gate),
      line(line),
      col(col)
{
}

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance()
    {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws()
    {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                advance();
            } else if (text.compare(pos, 2, "//") == 0) {
                while (pos < text.size() && text[pos] != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string ident()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '.'))
            advance();
        if (start == pos)
            throw ParseError("expected identifier", line, col);
        return text.substr(start, pos - start);
    }

    void expect(char c)
    {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", line, col);
        advance();
    }

    uint32_t integer()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            advance();
        if (start == pos)
            throw ParseError("expected integer", line, col);
        return static_cast<uint32_t>(std::stoul(text.substr(start, pos - start)));
    }

    void skip_string()
    {
        expect('"');
        while (pos < text.size() && text[pos] != '"')
            advance();
        expect('"');
    }
};

const std::map<std::string, GateKind> kGateTable = {
    {"h", GateKind::H},     {"s", GateKind::S},   {"sdg", GateKind::Sdg},
    {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"x", GateKind::X},
    {"y", GateKind::Y},     {"z", GateKind::Z},   {"cx", GateKind::CX},
};

} // namespace

LogicalCircuit parse_qasm(const std::string& text)
{
    LogicalCircuit circ;
    Lexer lex(text);
    std::string qreg_name;
    bool have_qreg = false;

    auto qubit_ref = [&]() -> uint32_t {
        int at_line = lex.line, at_col = lex.col;
        std::string reg = lex.ident();
        if (!have_qreg)
            throw ParseError("qubit reference before qreg declaration", at_line, at_col);
        if (reg != qreg_name)
            throw ParseError("unknown register '" + reg + "'", at_line, at_col);
        lex.expect('[');
        uint32_t idx = lex.integer();
        lex.expect(']');
        if (idx >= circ.width)
            throw ParseError("qubit index " + std::to_string(idx) + " out of range", at_line,
                             at_col);
        return idx;
    };

    while (!lex.eof()) {
        int at_line = lex.line, at_col = lex.col;
        std::string word = lex.ident();
        if (word == "OPENQASM") {
            lex.ident(); // version
            lex.expect(';');
        } else if (word == "include") {
            lex.skip_string();
            lex.expect(';');
        } else if (word == "qreg") {
            if (have_qreg)
                throw ParseError("multiple qreg declarations", at_line, at_col);
            qreg_name = lex.ident();
            lex.expect('[');
            circ.width = lex.integer();
            lex.expect(']');
            lex.expect(';');
            have_qreg = true;
        } else if (word == "creg") {
            lex.ident();
            lex.expect('[');
            lex.integer();
            lex.expect(']');
            lex.expect(';');
        } else if (word == "measure") {
            uint32_t q = qubit_ref();
            if (lex.peek() == '-') {
                lex.expect('-');
                lex.expect('>');
                lex.ident();
                lex.expect('[');
                lex.integer();
                lex.expect(']');
            }
            lex.expect(';');
            circ.gates.push_back(Gate::one(GateKind::MeasureZ, q));
        } else {
            auto it = kGateTable.find(word);
            if (it == kGateTable.end())
                throw UnsupportedGateError(word, at_line, at_col);
            uint32_t q0 = qubit_ref();
            if (it->second == GateKind::CX) {
                lex.expect(',');
                uint32_t q1 = qubit_ref();
                if (q0 == q1)
                    throw ParseError("cx with identical qubits", at_line, at_col);
                circ.gates.push_back(Gate::cx(q0, q1));
            } else {
                circ.gates.push_back(Gate::one(it->second, q0));
            }
            lex.expect(';');
        }
    }
    if (!have_qreg)
        throw ParseError("missing qreg declaration", lex.line, lex.col);
    validate(circ);
    return circ;
}

std::string print_qasm(const LogicalCircuit& c)
{
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.width << "];\n";
    os << "creg c[" << c.width << "];\n";
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureZ)
            os << "measure q[" << g.qubits[0] << "] -> c[" << g.qubits[0] << "];\n";
        else if (g.kind == GateKind::CX)
            os << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
        else
            os << gate_name(g.kind) << " q[" << g.qubits[0] << "];\n";
    }
    return os.str();
}

std::vector<std::vector<size_t>> OpDag::successors() const
{
    std::vector<std::vector<size_t>> succ(node_count);
    for (const auto& [a, b] : edges)
        succ[a].push_back(b);
    return succ;
}

std::vector<size_t> OpDag::in_degrees() const
{
    std::vector<size_t> deg(node_count, 0);
    for (const auto& [a, b] : edges)
        ++deg[b];
    return deg;
}

OpDag build_dag(const std::vector<std::vector<uint32_t>>& op_qubits)
{
    OpDag dag;
    dag.node_count = op_qubits.size();
    std::map<uint32_t, size_t> last_on_qubit;
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < op_qubits.size(); ++i) {
        for (uint32_t q : op_qubits[i]) {
            auto it = last_on_qubit.find(q);
            if (it != last_on_qubit.end() && it->second != i)
                edges.emplace_back(it->second, i);
            last_on_qubit[q] = i;
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    dag.edges = std::move(edges);
    return dag;
}

OpDag build_dag(const LogicalCircuit& c)
{
    std::vector<std::vector<uint32_t>> supports;
    supports.reserve(c.gates.size());
    for (const auto& g : c.gates)
        supports.push_back(g.qubits);
    return build_dag(supports);
}

} // namespace hetec
