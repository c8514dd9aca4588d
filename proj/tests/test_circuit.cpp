#include "hetec/circuit.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hetec;

TEST_CASE("parse a small program")
{
    LogicalCircuit c = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n");
    CHECK(c.width == 2);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0] == Gate::one(GateKind::H, 0));
    CHECK(c.gates[1] == Gate::cx(0, 1));
}

TEST_CASE("unsupported gate is named in the error")
{
    try {
        parse_qasm("qreg q[1];\nrz(0.3) q[0];\n");
        FAIL("expected UnsupportedGateError");
    } catch (const UnsupportedGateError& e) {
        CHECK(e.gate == "rz");
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse errors carry position; bad indices rejected")
{
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; h q[5];"), ParseError);
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[1],q[1];"), ParseError);
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; h q[0"), ParseError);
}

TEST_CASE("mid-circuit measurement rejected by validate")
{
    LogicalCircuit c;
    c.width = 1;
    c.gates = {Gate::one(GateKind::MeasureZ, 0), Gate::one(GateKind::H, 0)};
    CHECK_THROWS(validate(c));
}

TEST_CASE("print/parse round-trip")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        LogicalCircuit c = oracle::random_circuit(rng, 4, 30);
        CHECK(parse_qasm(print_qasm(c)) == c);
    }
}

namespace {

// O(n^2) dependency scan with per-qubit transitive reduction.
std::set<std::pair<size_t, size_t>> dag_oracle(const LogicalCircuit& c)
{
    std::set<std::pair<size_t, size_t>> edges;
    for (size_t b = 0; b < c.gates.size(); ++b)
        for (uint32_t q : c.gates[b].qubits) {
            for (size_t a = b; a-- > 0;) {
                auto& qa = c.gates[a].qubits;
                if (std::find(qa.begin(), qa.end(), q) != qa.end()) {
                    edges.insert({a, b});
                    break;
                }
            }
        }
    return edges;
}

} // namespace

TEST_CASE("dag basics")
{
    LogicalCircuit c;
    c.width = 2;
    c.gates = {Gate::one(GateKind::H, 0), Gate::one(GateKind::T, 1)};
    CHECK(build_dag(c).edges.empty());

    c.gates = {Gate::one(GateKind::H, 0), Gate::cx(0, 1), Gate::one(GateKind::T, 1)};
    OpDag d = build_dag(c);
    std::set<std::pair<size_t, size_t>> got(d.edges.begin(), d.edges.end());
    CHECK(got == std::set<std::pair<size_t, size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("dag matches brute-force oracle and is forward ordered")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        LogicalCircuit c = oracle::random_circuit(rng, 5, 20);
        OpDag d = build_dag(c);
        std::set<std::pair<size_t, size_t>> got(d.edges.begin(), d.edges.end());
        CHECK(got == dag_oracle(c));
        for (auto [a, b] : d.edges)
            CHECK(a < b); // edges point forward, so the DAG is acyclic
    }
}

TEST_CASE("benchmark structure")
{
    LogicalCircuit ising = gen_benchmark(BenchmarkKind::Ising, 4, 1);
    // n-1 coupling blocks, each CX-word-CX; words of length 1 are [clifford, T].
    size_t cx = 0;
    for (const auto& g : ising.gates)
        if (g.kind == GateKind::CX)
            ++cx;
    CHECK(cx == 6); // 3 couplings, two CX each
    CHECK(ising.t_count() == 3);

    CHECK(benchmark_rotation_count(BenchmarkKind::Ising, 4) == 3);

    LogicalCircuit adder = gen_benchmark(BenchmarkKind::Adder, 18, 30);
    CHECK(adder.width == 18);
    CHECK(adder.t_count() == 30 * benchmark_rotation_count(BenchmarkKind::Adder, 18));
    CHECK_NOTHROW(validate(adder));

    LogicalCircuit qft2 = gen_benchmark(BenchmarkKind::Qft, 2, 1);
    size_t h = 0;
    for (const auto& g : qft2.gates)
        if (g.kind == GateKind::H)
            ++h;
    CHECK(h >= 2); // one per qubit in the swap-free template
    CHECK(qft2.t_count() == benchmark_rotation_count(BenchmarkKind::Qft, 2));
}

TEST_CASE("benchmarks are deterministic and end in full measurement")
{
    LogicalCircuit a = gen_benchmark(BenchmarkKind::Qft, 8, 30);
    LogicalCircuit b = gen_benchmark(BenchmarkKind::Qft, 8, 30);
    CHECK(a == b);
    std::set<uint32_t> measured;
    for (const auto& g : a.gates)
        if (g.kind == GateKind::MeasureZ)
            measured.insert(g.qubits[0]);
    CHECK(measured.size() == a.width);
}
