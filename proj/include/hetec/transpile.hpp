#pragma once

#include "hetec/circuit.hpp"
#include "hetec/pauli.hpp"

#include <limits>
#include <optional>

namespace hetec {

// max_weight value meaning "no cap".
inline constexpr size_t kUnboundedWeight = std::numeric_limits<size_t>::max();

// Result of lowering a single gate: emitted PBC ops, plus a Pauli to be
// folded into the classical frame (full-pi gates X/Y/Z cost nothing
// fault-tolerantly and are tracked classically).
struct LoweredGate {
    std::vector<PbcOp> ops;
    std::optional<PauliProduct> frame_pauli;
};

LoweredGate decompose_gate(const Gate& g);

// Lower a full circuit: decompose every gate, conjugate by the running Pauli
// frame, and cancel/merge adjacent equal-product Clifford rotations
// (quarter-turn pairs become frame Paulis).
PbcCircuit lower_circuit(const LogicalCircuit& c);

// Move a +-pi/4 Clifford rotation past `op` (toward the measurement end).
// Commuting products leave the op unchanged; anticommuting products map it
// to the phase-normalized i*P*P' with the residual sign folded into the
// angle or measurement sign.
PbcOp commute_past(const PbcOp& clifford, const PbcOp& op);

// Commute Clifford rotations rightward past non-Cliffords and measurements,
// performing a swap only when the transformed operator's weight stays
// within max_weight. Cliffords whose whole support has terminal
// measurements are absorbed; blocked Cliffords stay in place. The result is
// unitarily equivalent to the input.
PbcCircuit prune(PbcCircuit circuit, size_t max_weight);

} // namespace hetec
