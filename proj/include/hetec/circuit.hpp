#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetec {

enum class GateKind : uint8_t { H, S, Sdg, T, Tdg, X, Y, Z, CX, MeasureZ };

std::string gate_name(GateKind k);

struct Gate {
    GateKind kind;
    std::vector<uint32_t> qubits; // 1 entry, or 2 distinct for CX

    static Gate one(GateKind k, uint32_t q) { return Gate{k, {q}}; }
    static Gate cx(uint32_t c, uint32_t t) { return Gate{GateKind::CX, {c, t}}; }

    bool operator==(const Gate& other) const
    {
        return kind == other.kind && qubits == other.qubits;
    }
};

struct LogicalCircuit {
    uint32_t width = 0;
    std::vector<Gate> gates;
    std::string name;

    size_t t_count() const;

    bool operator==(const LogicalCircuit& other) const
    {
        return width == other.width && gates == other.gates;
    }
};

// Validates gate arity, qubit ranges, and measurement terminality.
void validate(const LogicalCircuit& c);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col);
    int line;
    int col;
};

struct UnsupportedGateError : std::runtime_error {
    UnsupportedGateError(const std::string& gate, int line, int col);
    std::string gate;
    int line;
    int col;
};

// OPENQASM 2.0 subset: one qreg; gates h,s,sdg,t,tdg,x,y,z,cx,measure;
// no classical control, no parameterized gates.
LogicalCircuit parse_qasm(const std::string& text);

// Inverse of parse_qasm: parse_qasm(print_qasm(c)) == c.
std::string print_qasm(const LogicalCircuit& c);

// Dependency DAG over operation indices: edge (a,b) iff b is the next op
// touching some qubit of a (per-qubit transitive reduction).
struct OpDag {
    size_t node_count = 0;
    std::vector<std::pair<size_t, size_t>> edges;

    std::vector<std::vector<size_t>> successors() const;
    std::vector<size_t> in_degrees() const;
};

OpDag build_dag(const LogicalCircuit& c);

// Same dependency structure over arbitrary ops given their qubit supports.
OpDag build_dag(const std::vector<std::vector<uint32_t>>& op_qubits);

enum class BenchmarkKind { Adder, Qft, Ising };

// Generates a pure Clifford+T benchmark with terminal Z measurements on all
// qubits. Every phase rotation of the textbook template is replaced by a
// deterministic word containing exactly `rz_word_len` T gates, each preceded
// by a pseudo-random H/S/Sdg Clifford (seeded by benchmark kind and position).
LogicalCircuit gen_benchmark(BenchmarkKind kind, uint32_t n, uint32_t rz_word_len);

// Number of phase-rotation sites in the benchmark template (before word
// substitution); T-count of the generated circuit is this times rz_word_len.
size_t benchmark_rotation_count(BenchmarkKind kind, uint32_t n);

} // namespace hetec
