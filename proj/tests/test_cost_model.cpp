#include "hetec/cost_model.hpp"
#include "hetec/scheduler.hpp"

#include <doctest.h>

#include <cmath>

using namespace hetec;

TEST_CASE("surface error formulas")
{
    CHECK(surface_clifford_error(0.01, 13) == doctest::Approx(0.03).epsilon(1e-15));
    CHECK(surface_clifford_error(0.01, 5) == doctest::Approx(0.03).epsilon(1e-15));
    CHECK(surface_clifford_error(1e-3, 1) == doctest::Approx(3e-3).epsilon(1e-15));
    CHECK(surface_clifford_error(1e-3, 13) == doctest::Approx(3e-9).epsilon(1e-15));

    CHECK(surface_nonclifford_error(1e-3, 13, 1) == surface_clifford_error(1e-3, 13));
    CHECK(surface_nonclifford_error(1e-3, 13, 4) == doctest::Approx(1.2e-8).epsilon(1e-15));
    CHECK(surface_nonclifford_error(1e-3, 13, 4, true) ==
          doctest::Approx(2.4e-8).epsilon(1e-15));

    CHECK_THROWS(surface_clifford_error(0, 13));
    CHECK_THROWS(surface_nonclifford_error(1e-3, 13, 0));
}

TEST_CASE("gross table anchors are exact")
{
    const double ps[3] = {1e-3, 1e-4, 1e-5};
    const double expected[4][3] = {
        {4e-5, 2e-9, 6e-14},   // CliffordRotation
        {4e-7, 4e-12, 4e-17},  // Automorphism
        {2e-5, 8e-10, 3e-14},  // Measurement
        {2e-5, 8e-10, 3e-14},  // JointXX
    };
    const GrossOpKind kinds[4] = {GrossOpKind::CliffordRotation, GrossOpKind::Automorphism,
                                  GrossOpKind::Measurement, GrossOpKind::JointXX};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 3; ++i)
            CHECK(gross_op_error(kinds[k], ps[i]) == expected[k][i]);
}

TEST_CASE("gross table log-log interpolation")
{
    double p = std::pow(10.0, -3.5);
    double mid = std::exp((std::log(2e-5) + std::log(8e-10)) / 2);
    CHECK(gross_op_error(GrossOpKind::Measurement, p) == doctest::Approx(mid).epsilon(1e-9));
    CHECK(mid == doctest::Approx(1.26e-7).epsilon(0.01));

    // monotone in p across both segments and below the last anchor
    double prev = 0;
    for (double q : {1e-6, 1e-5, 3e-5, 1e-4, 3e-4, 1e-3}) {
        double e = gross_op_error(GrossOpKind::CliffordRotation, q);
        CHECK(e > prev);
        prev = e;
    }
    CHECK_THROWS(gross_op_error(GrossOpKind::Measurement, 2e-3));
}

TEST_CASE("physical qubit accounting reproduces the published rows")
{
    ArchitectureConfig arch;
    auto with_blocks = [&](uint32_t b) {
        ArchitectureConfig a = arch;
        a.gross_blocks = b;
        return physical_qubits(a);
    };
    CHECK(block_count(18, 2, 11) == 2);
    CHECK(block_count(98, 2, 11) == 9);
    CHECK(block_count(2, 2, 11) == 0);

    CHECK(with_blocks(block_count(18, 2, 11)) == 1355);  // Adder 18
    CHECK(with_blocks(block_count(28, 2, 11)) == 1746);  // Adder 28
    CHECK(with_blocks(block_count(26, 2, 11)) == 1746);  // Ising 26
    CHECK(with_blocks(block_count(42, 2, 11)) == 2137);  // Ising 42
    CHECK(with_blocks(block_count(98, 2, 11)) == 4092);  // Ising 98
    CHECK(with_blocks(block_count(18, 2, 11)) == 1355);  // QFT 18

    ArchitectureConfig single;
    single.surface_tiles = 1;
    CHECK(physical_qubits(single) == std::llround(191.0 * 1.5));
}

TEST_CASE("bus variants")
{
    CHECK(bus_params(BusVariant::MonoLayer).ancilla_qubits == 103);
    CHECK(bus_params(BusVariant::MonoLayer).measurement_rounds == 7);
    CHECK(bus_params(BusVariant::Ssip).ancilla_qubits == 180);
    CHECK(bus_params(BusVariant::Ssip).measurement_rounds == 12);
    CHECK(bus_params(BusVariant::Ckbb).ancilla_qubits == 1380);
    CHECK(bus_variant_from_name("ckbb") == BusVariant::Ckbb);
    CHECK_THROWS(bus_variant_from_name("rail"));
}

TEST_CASE("estimate_circuit categorization and totals")
{
    Schedule s;
    CHECK(estimate_circuit(s).total == 0);

    ScheduleEvent fetch;
    fetch.kind = EventKind::Fetch;
    fetch.error_contribution = 4.16e-5;
    fetch.category = ErrorCategory::IO;
    ScheduleEvent mem;
    mem.kind = EventKind::InMemoryClifford;
    mem.error_contribution = 4e-5;
    mem.category = ErrorCategory::Clifford;
    ScheduleEvent rot;
    rot.kind = EventKind::SurfaceNonClifford;
    rot.error_contribution = surface_nonclifford_error(1e-3, 13, 2);
    rot.category = ErrorCategory::NonClifford;
    s.events = {fetch, mem, rot};

    ErrorBreakdown b = estimate_circuit(s);
    CHECK(b.io == 4.16e-5);
    CHECK(b.clifford == 4e-5);
    CHECK(b.non_clifford == doctest::Approx(6e-9).epsilon(1e-15));
    CHECK(b.total == doctest::Approx(b.io + b.clifford + b.non_clifford).epsilon(1e-15));

    ErrorBreakdown prod = estimate_circuit(s, true);
    double survive = (1 - 4.16e-5) * (1 - 4e-5) * (1 - 6e-9);
    CHECK(prod.total == doctest::Approx(1 - survive).epsilon(1e-12));
}

TEST_CASE("config serialization round-trips")
{
    ArchitectureConfig a;
    a.surface_tiles = 4;
    a.distance = 9;
    a.p = 1e-4;
    a.bus = BusVariant::Ssip;
    a.gross_blocks = 3;
    a.product_mode = true;
    ArchitectureConfig back = ArchitectureConfig::from_json(a.to_json());
    CHECK(back.surface_tiles == 4);
    CHECK(back.distance == 9);
    CHECK(back.p == 1e-4);
    CHECK(back.bus == BusVariant::Ssip);
    CHECK(back.gross_blocks == 3);
    CHECK(back.product_mode);
    CHECK(back.cost == a.cost);
    CHECK(back.omega.generators.size() == a.omega.generators.size());

    CostTable t;
    t.gross_measurement = {1e-5, 1e-9, 1e-13};
    CostTable tb = CostTable::from_json(t.to_json());
    CHECK(tb == t);

    ArchitectureConfig bad;
    bad.distance = 4;
    CHECK_THROWS(bad.check());
}
