#include "hetec/pauli.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace hetec;

TEST_CASE("single-qubit pauli products")
{
    auto [ph, prod] = pauli_mul(PauliProduct::single(0, Axis::Z), PauliProduct::single(0, Axis::X));
    CHECK(ph.i_exponent() == 1); // Z*X = +iY
    CHECK(prod == PauliProduct::single(0, Axis::Y));

    auto [ph2, prod2] =
        pauli_mul(PauliProduct::single(0, Axis::X), PauliProduct::single(0, Axis::Z));
    CHECK(ph2.i_exponent() == 3); // X*Z = -iY
    CHECK(prod2 == PauliProduct::single(0, Axis::Y));

    auto [ph3, prod3] =
        pauli_mul(PauliProduct::single(0, Axis::X), PauliProduct::single(0, Axis::Y));
    CHECK(ph3.i_exponent() == 1); // X*Y = +iZ
    CHECK(prod3 == PauliProduct::single(0, Axis::Z));
}

TEST_CASE("multi-qubit product collects per-factor phases")
{
    PauliProduct a{{0, Axis::X}, {1, Axis::X}};
    PauliProduct b{{0, Axis::X}, {1, Axis::Z}};
    auto [ph, prod] = pauli_mul(a, b);
    CHECK(ph.i_exponent() == 3); // (+1)(-i) = -i
    CHECK(prod == PauliProduct::single(1, Axis::Y));
}

TEST_CASE("pauli_mul matches the dense-matrix oracle")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> axis_pick(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        PauliProduct a, b;
        for (uint32_t q = 0; q < 3; ++q) {
            if (int ax = axis_pick(rng))
                a.set(q, static_cast<Axis>(ax));
            if (int ax = axis_pick(rng))
                b.set(q, static_cast<Axis>(ax));
        }
        auto [ph, prod] = pauli_mul(a, b);
        oracle::Mat lhs = oracle::pauli_matrix(a, 3) * oracle::pauli_matrix(b, 3);
        oracle::Mat rhs = std::pow(oracle::cd(0, 1), ph.i_exponent()) *
                          oracle::pauli_matrix(prod, 3);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(anticommutes(a, b) ==
              ((oracle::pauli_matrix(a, 3) * oracle::pauli_matrix(b, 3) +
                oracle::pauli_matrix(b, 3) * oracle::pauli_matrix(a, 3))
                   .cwiseAbs()
                   .maxCoeff() < 1e-12));
    }
}

TEST_CASE("anticommutation parity rule")
{
    CHECK(anticommutes(PauliProduct::single(0, Axis::Z), PauliProduct::single(0, Axis::X)));
    PauliProduct zx{{0, Axis::Z}, {1, Axis::X}};
    CHECK_FALSE(anticommutes(zx, zx));
    PauliProduct xz{{0, Axis::X}, {1, Axis::Z}};
    CHECK_FALSE(anticommutes(zx, xz)); // two anticommuting positions, even parity
}

TEST_CASE("op weight")
{
    CHECK(op_weight(PbcOp::rotation(PauliProduct::single(0, Axis::Z), Angle::PosEighth)) == 1);
    CHECK(op_weight(PbcOp::rotation(PauliProduct{{0, Axis::Z}, {1, Axis::X}},
                                    Angle::PosEighth)) == 2);
}

TEST_CASE("pbc text round-trip is bit exact")
{
    PbcCircuit c;
    c.width = 4;
    c.ops.push_back(PbcOp::rotation(PauliProduct{{0, Axis::Y}, {1, Axis::X}}, Angle::NegEighth));
    c.ops.push_back(PbcOp::rotation(PauliProduct::single(2, Axis::Z), Angle::PosQuarter));
    c.ops.push_back(PbcOp::measurement(PauliProduct{{0, Axis::Z}, {3, Axis::Z}}, -1));
    c.frame.set(0, Axis::X);
    c.frame.set(2, Axis::Z);

    std::string text = serialize_pbc(c);
    PbcCircuit back = parse_pbc(text);
    CHECK(back == c);
    CHECK(serialize_pbc(back) == text);
}

TEST_CASE("pbc circuit counters")
{
    PbcCircuit c;
    c.width = 2;
    c.ops.push_back(PbcOp::rotation(PauliProduct::single(0, Axis::Z), Angle::PosQuarter));
    c.ops.push_back(PbcOp::rotation(PauliProduct{{0, Axis::Z}, {1, Axis::X}}, Angle::NegEighth));
    c.ops.push_back(PbcOp::measurement(PauliProduct::single(1, Axis::Z)));
    CHECK(c.clifford_count() == 1);
    CHECK(c.nonclifford_count() == 1);
    CHECK(c.measurement_count() == 1);
    CHECK(c.max_op_weight() == 2);
}
