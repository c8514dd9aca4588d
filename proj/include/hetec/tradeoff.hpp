#pragma once

#include "hetec/circuit.hpp"
#include "hetec/cost_model.hpp"
#include "hetec/scheduler.hpp"
#include "hetec/transpile.hpp"

#include <string>

namespace hetec {

// Full transpile -> prune -> schedule -> estimate run.
struct PipelineResult {
    PbcCircuit pruned;
    Schedule sched;
    ErrorBreakdown errors;
    int64_t qubits = 0;
    ArchitectureConfig arch; // resolved (block count auto-sized)
};

// If the architecture has too few gross blocks for the circuit width, the
// block count is raised to ceil((n - S) / capacity).
PipelineResult run_pipeline(const LogicalCircuit& circuit, ArchitectureConfig arch,
                            size_t max_weight, uint64_t seed);

struct HomogeneousRun {
    int64_t cycles = 0;
    double error = 0;
    int64_t qubits = 0;
    ErrorBreakdown breakdown;
};

// Pure surface code baseline: S = n tiles, no gross blocks, W = n.
HomogeneousRun homogeneous_run(const LogicalCircuit& circuit, uint32_t distance, double p,
                               const ArchitectureConfig& base, uint64_t seed = 0);

// Smallest odd d >= 3 whose homogeneous error is <= e_target.
uint32_t min_distance_for_target(const LogicalCircuit& circuit, double p, double e_target,
                                 const ArchitectureConfig& base, uint64_t seed = 0);

struct TradeoffReport {
    double e_target = 0;
    uint32_t d_surf = 3;
    int64_t q_het = 0;
    int64_t q_homog = 0;
    int64_t t_het = 0;
    int64_t t_homog = 0;
    double r_qub_improvement = 1; // q_homog / q_het; > 1 favors heterogeneous
    double r_qub_paper = 1;       // q_het / q_homog
    double r_time = 1;            // t_homog / t_het; < 1 means slowdown
    double slowdown = 1;          // t_het / t_homog

    static TradeoffReport from_measurements(double e_target, uint32_t d_surf, int64_t q_het,
                                            int64_t q_homog, int64_t t_het, int64_t t_homog);

    std::string to_json() const;
};

// Heterogeneous run, target error = its achieved error, minimum-distance
// homogeneous baseline, and the qubit/time ratios.
TradeoffReport compare(const LogicalCircuit& circuit, const ArchitectureConfig& het_arch,
                       uint64_t seed);

} // namespace hetec
