#include "hetec/tradeoff.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace hetec {

using nlohmann::json;

PipelineResult run_pipeline(const LogicalCircuit& circuit, ArchitectureConfig arch,
                            size_t max_weight, uint64_t seed)
{
    validate(circuit);
    arch.check();
    uint32_t needed = block_count(circuit.width, arch.surface_tiles, arch.block_capacity);
    if (arch.gross_blocks < needed)
        arch.gross_blocks = needed;

    PipelineResult r;
    r.arch = arch;
    r.pruned = prune(lower_circuit(circuit), max_weight);
    r.sched = schedule(r.pruned, arch, seed);
    r.errors = estimate_circuit(r.sched, arch.product_mode);
    r.qubits = physical_qubits(arch);
    return r;
}

HomogeneousRun homogeneous_run(const LogicalCircuit& circuit, uint32_t distance, double p,
                               const ArchitectureConfig& base, uint64_t seed)
{
    ArchitectureConfig arch = base;
    arch.surface_tiles = std::max(1u, circuit.width);
    arch.gross_blocks = 0;
    arch.distance = distance;
    arch.p = p;

    PbcCircuit pruned = prune(lower_circuit(circuit), kUnboundedWeight);
    Schedule sched = schedule(pruned, arch, seed);
    ErrorBreakdown eb = estimate_circuit(sched, arch.product_mode);

    HomogeneousRun r;
    r.cycles = sched.total_cycles;
    r.error = eb.total;
    r.qubits = homogeneous_physical_qubits(circuit.width, arch);
    r.breakdown = eb;
    return r;
}

uint32_t min_distance_for_target(const LogicalCircuit& circuit, double p, double e_target,
                                 const ArchitectureConfig& base, uint64_t seed)
{
    if (p >= base.cost.surface_p0)
        throw std::domain_error("min_distance_for_target: p must sit below the surface threshold");
    // Tiny relative slack so pow() rounding cannot push the search one
    // distance step past an exactly-achievable target.
    for (uint32_t d = 3;; d += 2) {
        if (homogeneous_run(circuit, d, p, base, seed).error <= e_target * (1 + 1e-9))
            return d;
        if (d > 9999)
            throw std::runtime_error("min_distance_for_target: no distance reaches the target");
    }
}

TradeoffReport TradeoffReport::from_measurements(double e_target, uint32_t d_surf, int64_t q_het,
                                                 int64_t q_homog, int64_t t_het, int64_t t_homog)
{
    TradeoffReport r;
    r.e_target = e_target;
    r.d_surf = d_surf;
    r.q_het = q_het;
    r.q_homog = q_homog;
    r.t_het = t_het;
    r.t_homog = t_homog;
    r.r_qub_improvement = q_het > 0 ? static_cast<double>(q_homog) / q_het : 1.0;
    r.r_qub_paper = q_homog > 0 ? static_cast<double>(q_het) / q_homog : 1.0;
    r.r_time = t_het > 0 ? static_cast<double>(t_homog) / t_het : 1.0;
    r.slowdown = t_homog > 0 ? static_cast<double>(t_het) / t_homog : 1.0;
    return r;
}

std::string TradeoffReport::to_json() const
{
    json j{{"e_target", e_target},
           {"d_surf", d_surf},
           {"q_het", q_het},
           {"q_homog", q_homog},
           {"t_het", t_het},
           {"t_homog", t_homog},
           {"r_qub_improvement", r_qub_improvement},
           {"r_qub_paper", r_qub_paper},
           {"r_time", r_time},
           {"slowdown", slowdown}};
    return j.dump(2) + "\n";
}

TradeoffReport compare(const LogicalCircuit& circuit, const ArchitectureConfig& het_arch,
                       uint64_t seed)
{
    size_t w = std::max<uint32_t>(1, het_arch.surface_tiles);
    PipelineResult het = run_pipeline(circuit, het_arch, w, seed);

    // A purely surface-code "heterogeneous" side is accounted like the
    // baseline so that self-comparison yields unit ratios.
    int64_t q_het = het.arch.gross_blocks == 0
                        ? homogeneous_physical_qubits(circuit.width, het.arch)
                        : het.qubits;

    double e_target = het.errors.total;
    uint32_t d_surf = min_distance_for_target(circuit, het.arch.p, e_target, het.arch, seed);
    HomogeneousRun homog = homogeneous_run(circuit, d_surf, het.arch.p, het.arch, seed);

    return TradeoffReport::from_measurements(e_target, d_surf, q_het, homog.qubits,
                                             het.sched.total_cycles, homog.cycles);
}

} // namespace hetec
