#include "hetec/transpile.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace hetec;

namespace {

PbcOp rot(std::initializer_list<std::pair<uint32_t, Axis>> p, Angle a)
{
    return PbcOp::rotation(PauliProduct(p), a);
}

} // namespace

TEST_CASE("gate decompositions")
{
    LoweredGate t = decompose_gate(Gate::one(GateKind::T, 3));
    REQUIRE(t.ops.size() == 1);
    CHECK(t.ops[0] == rot({{3, Axis::Z}}, Angle::PosEighth));

    LoweredGate cx = decompose_gate(Gate::cx(0, 1));
    REQUIRE(cx.ops.size() == 3);
    CHECK(cx.ops[0] == rot({{0, Axis::Z}, {1, Axis::X}}, Angle::PosQuarter));
    CHECK(cx.ops[1] == rot({{0, Axis::Z}}, Angle::NegQuarter));
    CHECK(cx.ops[2] == rot({{1, Axis::X}}, Angle::NegQuarter));

    LoweredGate h = decompose_gate(Gate::one(GateKind::H, 0));
    REQUIRE(h.ops.size() == 3);
    PbcCircuit hc{1, h.ops, {}};
    CHECK(oracle::phase_aligned_distance(
              oracle::circuit_unitary({1, {Gate::one(GateKind::H, 0)}, ""}),
              oracle::pbc_unitary(hc)) < 1e-12);

    LoweredGate x = decompose_gate(Gate::one(GateKind::X, 0));
    CHECK(x.ops.empty());
    REQUIRE(x.frame_pauli.has_value());
    CHECK(*x.frame_pauli == PauliProduct::single(0, Axis::X));
}

TEST_CASE("commute_past sign conventions")
{
    PbcOp z4 = rot({{0, Axis::Z}}, Angle::PosQuarter);

    // commuting pair: unchanged
    PbcOp z8 = rot({{0, Axis::Z}}, Angle::PosEighth);
    CHECK(commute_past(z4, z8) == z8);

    // Z(pi/4) past X(pi/8) -> Y(-pi/8)
    PbcOp x8 = rot({{0, Axis::X}}, Angle::PosEighth);
    CHECK(commute_past(z4, x8) == rot({{0, Axis::Y}}, Angle::NegEighth));

    // ZX(pi/4) past X0(pi/8) -> Y0X1(-pi/8)
    PbcOp zx4 = rot({{0, Axis::Z}, {1, Axis::X}}, Angle::PosQuarter);
    CHECK(commute_past(zx4, x8) == rot({{0, Axis::Y}, {1, Axis::X}}, Angle::NegEighth));
}

TEST_CASE("commute_past is validated by the unitary oracle")
{
    // C * op == op' * C as unitaries, for random anticommuting pairs.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> axis_pick(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    int checked = 0;
    while (checked < 50) {
        PauliProduct p, q;
        for (uint32_t k = 0; k < 2; ++k) {
            if (int ax = axis_pick(rng))
                p.set(k, static_cast<Axis>(ax));
            if (int ax = axis_pick(rng))
                q.set(k, static_cast<Axis>(ax));
        }
        if (p.empty() || q.empty())
            continue;
        PbcOp cliff = PbcOp::rotation(p, coin(rng) ? Angle::PosQuarter : Angle::NegQuarter);
        PbcOp op = PbcOp::rotation(q, coin(rng) ? Angle::PosEighth : Angle::NegEighth);
        PbcOp moved = commute_past(cliff, op);

        oracle::Mat cm = oracle::rotation_matrix(cliff.pauli, angle_radians(cliff.angle), 2);
        oracle::Mat om = oracle::rotation_matrix(op.pauli, angle_radians(op.angle), 2);
        oracle::Mat mm = oracle::rotation_matrix(moved.pauli, angle_radians(moved.angle), 2);
        CHECK(oracle::phase_aligned_distance(om * cm, cm * mm) < 1e-12);

        // involution: moving back with the same clifford restores the op
        CHECK(commute_past(cliff, commute_past(cliff, op)).pauli == op.pauli);
        checked++;
    }
}

TEST_CASE("prune absorbs cliffords into terminal measurements")
{
    PbcCircuit c;
    c.width = 1;
    c.ops = {rot({{0, Axis::Z}}, Angle::PosQuarter), rot({{0, Axis::X}}, Angle::PosEighth),
             PbcOp::measurement(PauliProduct::single(0, Axis::Z))};
    PbcCircuit out = prune(c, 1);
    REQUIRE(out.ops.size() == 2);
    CHECK(out.ops[0] == rot({{0, Axis::Y}}, Angle::NegEighth));
    CHECK(out.ops[1].is_measurement());
    CHECK(out.clifford_count() == 0);
}

TEST_CASE("prune keeps cliffords blocked by the weight cap")
{
    PbcCircuit c;
    c.width = 2;
    c.ops = {rot({{0, Axis::Z}, {1, Axis::Z}}, Angle::PosQuarter),
             rot({{0, Axis::X}}, Angle::PosEighth),
             PbcOp::measurement(PauliProduct::single(0, Axis::Z)),
             PbcOp::measurement(PauliProduct::single(1, Axis::Z))};
    PbcCircuit out = prune(c, 1);
    CHECK(out.clifford_count() == 1);
    CHECK(out.ops[0] == c.ops[0]); // still in front
}

TEST_CASE("prune of empty circuit")
{
    PbcCircuit c;
    c.width = 3;
    CHECK(prune(c, 1).ops.empty());
}

TEST_CASE("lower + prune preserve the unitary at every weight cap")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        LogicalCircuit lc = oracle::random_circuit(rng, 3, 15);
        oracle::Mat ref = oracle::circuit_unitary(lc);
        PbcCircuit lowered = lower_circuit(lc);
        CHECK(oracle::phase_aligned_distance(ref, oracle::pbc_unitary(lowered)) < 1e-9);
        for (size_t w : {size_t(1), size_t(2), kUnboundedWeight}) {
            PbcCircuit pruned = prune(lowered, w);
            CHECK(oracle::phase_aligned_distance(ref, oracle::pbc_unitary(pruned)) < 1e-9);
        }
    }
}

TEST_CASE("weight cap property on random circuits")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        LogicalCircuit lc = oracle::random_circuit(rng, 4, 25);
        PbcCircuit lowered = lower_circuit(lc);
        size_t w = 2;
        PbcCircuit pruned = prune(lowered, w);
        for (const auto& op : pruned.ops)
            if (!op.is_clifford_rotation())
                CHECK(op_weight(op) <= std::max(w, lowered.max_op_weight()));
    }
}

TEST_CASE("unbounded prune with terminal measurements removes all cliffords")
{
    LogicalCircuit lc = gen_benchmark(BenchmarkKind::Ising, 6, 4);
    PbcCircuit pruned = prune(lower_circuit(lc), kUnboundedWeight);
    CHECK(pruned.clifford_count() == 0);
    CHECK(pruned.nonclifford_count() == lc.t_count());
}
