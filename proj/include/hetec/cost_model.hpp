#pragma once

#include "hetec/memory.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace hetec {

enum class GrossOpKind : uint8_t { CliffordRotation, Automorphism, Measurement, JointXX };

enum class BusVariant : uint8_t { MonoLayer, Ssip, Ckbb };

struct BusParams {
    uint32_t ancilla_qubits;
    int64_t measurement_rounds;
};

BusParams bus_params(BusVariant v); // mono (103, 7), SSIP (180, 12), CKBB (1380, 12)

BusVariant bus_variant_from_name(const std::string& name);
std::string bus_variant_name(BusVariant v);

// Instruction error/duration tables. Gross anchors are given at
// p = 1e-3, 1e-4, 1e-5 (in that order) with log-log interpolation between.
struct CostTable {
    std::array<double, 3> gross_clifford_rotation{4e-5, 2e-9, 6e-14};
    std::array<double, 3> gross_automorphism{4e-7, 4e-12, 4e-17};
    std::array<double, 3> gross_measurement{2e-5, 8e-10, 3e-14};
    std::array<double, 3> gross_joint_xx{2e-5, 8e-10, 3e-14};

    double surface_a = 0.03;  // logical error at p = p0
    double surface_p0 = 0.01;

    GrossTimes gross_times{};

    bool operator==(const CostTable&) const = default;

    std::string to_json() const;
    static CostTable from_json(const std::string& text);
    static CostTable load_file(const std::string& path);
};

// 0.03 * (p / 0.01)^((d+1)/2)
double surface_clifford_error(double p, uint32_t d, const CostTable& table = CostTable{});

// w_pauli times the Clifford rate; `doubled` applies the optional x2 reading
// of the estimator text.
double surface_nonclifford_error(double p, uint32_t d, size_t w, bool doubled = false,
                                 const CostTable& table = CostTable{});

// Exact anchor values at p = 1e-3/1e-4/1e-5, log-log interpolation between,
// log-log extrapolation (with a warning) below 1e-5. p > 1e-3 is rejected.
double gross_op_error(GrossOpKind kind, double p, const CostTable& table = CostTable{});

struct ArchitectureConfig {
    uint32_t surface_tiles = 2; // S
    uint32_t distance = 13;     // surface code distance d (odd)
    uint32_t gross_blocks = 0;  // B
    uint32_t block_capacity = 11;
    BusVariant bus = BusVariant::MonoLayer;
    double p = 1e-3;

    // Accounting constants.
    uint32_t qubits_per_block = 288; // 144 data + 144 check
    double c_tile = 191.0;           // per-tile constant; 2 * 191 * 1.5 = 573
    double routing_factor = 1.5;
    double homog_qubits_per_logical = 463.0;

    // Estimator flags.
    bool nonclifford_doubled = false;
    double in_memory_clifford_multiplier = 1.0; // cycles scale on the 14-cycle base
    double idle_error_per_cycle = 0.0;          // 0 disables idle accrual
    bool product_mode = false;                  // total = 1 - prod(1 - e_i)
    bool sync_mode = true;

    GroupSpec group{};
    GeneratorSet omega = GeneratorSet::default_set();
    CostTable cost{};

    void check() const; // S >= 1, d odd >= 3, B >= 0

    std::string to_json() const;
    static ArchitectureConfig from_json(const std::string& text);
    static ArchitectureConfig load_file(const std::string& path);
};

// B * (qubits_per_block + bus_qubits) + round(S * c_tile * routing_factor).
int64_t physical_qubits(const ArchitectureConfig& arch);

// Homogeneous (all-surface) accounting: calibrated per-logical-qubit constant.
int64_t homogeneous_physical_qubits(uint32_t n_qubits, const ArchitectureConfig& arch);

// ceil(max(0, n - S) / capacity)
uint32_t block_count(uint32_t n_qubits, uint32_t surface_tiles, uint32_t capacity);

enum class ErrorCategory : uint8_t { IO, Clifford, NonClifford };

struct ErrorBreakdown {
    double io = 0;
    double clifford = 0;
    double non_clifford = 0;
    double total = 0;
    int64_t cycles = 0;
};

struct Schedule;

// Per-category sums over a schedule's event error contributions.
ErrorBreakdown estimate_circuit(const Schedule& schedule, bool product_mode = false);

} // namespace hetec
