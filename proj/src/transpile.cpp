#include "hetec/transpile.hpp"

#include <cassert>
#include <stdexcept>

namespace hetec {

namespace {

PauliProduct mul_drop_phase(const PauliProduct& a, const PauliProduct& b)
{
    return pauli_mul(a, b).second;
}

void flip_op(PbcOp& op)
{
    if (op.is_rotation())
        op.angle = negated(op.angle);
    else
        op.sign = -op.sign;
}

} // namespace

LoweredGate decompose_gate(const Gate& g)
{
    LoweredGate out;
    auto rot = [](PauliProduct p, Angle a) { return PbcOp::rotation(std::move(p), a); };
    switch (g.kind) {
        case GateKind::H: {
            auto z = PauliProduct::single(g.qubits[0], Axis::Z);
            auto x = PauliProduct::single(g.qubits[0], Axis::X);
            out.ops = {rot(z, Angle::PosQuarter), rot(x, Angle::PosQuarter),
                       rot(z, Angle::PosQuarter)};
            break;
        }
        case GateKind::S:
            out.ops = {rot(PauliProduct::single(g.qubits[0], Axis::Z), Angle::PosQuarter)};
            break;
        case GateKind::Sdg:
            out.ops = {rot(PauliProduct::single(g.qubits[0], Axis::Z), Angle::NegQuarter)};
            break;
        case GateKind::T:
            out.ops = {rot(PauliProduct::single(g.qubits[0], Axis::Z), Angle::PosEighth)};
            break;
        case GateKind::Tdg:
            out.ops = {rot(PauliProduct::single(g.qubits[0], Axis::Z), Angle::NegEighth)};
            break;
        case GateKind::CX: {
            PauliProduct zx;
            zx.set(g.qubits[0], Axis::Z);
            zx.set(g.qubits[1], Axis::X);
            out.ops = {rot(zx, Angle::PosQuarter),
                       rot(PauliProduct::single(g.qubits[0], Axis::Z), Angle::NegQuarter),
                       rot(PauliProduct::single(g.qubits[1], Axis::X), Angle::NegQuarter)};
            break;
        }
        case GateKind::X:
            out.frame_pauli = PauliProduct::single(g.qubits[0], Axis::X);
            break;
        case GateKind::Y:
            out.frame_pauli = PauliProduct::single(g.qubits[0], Axis::Y);
            break;
        case GateKind::Z:
            out.frame_pauli = PauliProduct::single(g.qubits[0], Axis::Z);
            break;
        case GateKind::MeasureZ:
            out.ops = {PbcOp::measurement(PauliProduct::single(g.qubits[0], Axis::Z))};
            break;
    }
    return out;
}

PbcOp commute_past(const PbcOp& clifford, const PbcOp& op)
{
    if (!clifford.is_clifford_rotation())
        throw std::invalid_argument("commute_past requires a +-pi/4 rotation");
    if (!anticommutes(clifford.pauli, op.pauli))
        return op;
    auto [phase, product] = pauli_mul(clifford.pauli, op.pauli);
    // i * P * P' for a +pi/4 clifford, -i * P * P' for -pi/4; the combined
    // phase is real (+-1) and folds into the angle or measurement sign.
    int iexp = (phase.i_exponent() + (clifford.angle == Angle::PosQuarter ? 1 : 3)) % 4;
    assert(iexp == 0 || iexp == 2);
    PbcOp result = op;
    result.pauli = std::move(product);
    if (iexp == 2)
        flip_op(result);
    return result;
}

PbcCircuit lower_circuit(const LogicalCircuit& c)
{
    validate(c);
    PbcCircuit out;
    out.width = c.width;
    PauliProduct frame;

    auto push = [&](PbcOp op) {
        if (anticommutes(frame, op.pauli))
            flip_op(op);
        if (op.is_clifford_rotation() && !out.ops.empty()) {
            PbcOp& last = out.ops.back();
            if (last.is_clifford_rotation() && last.pauli == op.pauli) {
                if (last.angle != op.angle) {
                    out.ops.pop_back(); // quarter turns cancel
                } else {
                    // merged half turn is a Pauli, tracked in the frame
                    PauliProduct p = op.pauli;
                    out.ops.pop_back();
                    frame = mul_drop_phase(frame, p);
                }
                return;
            }
        }
        out.ops.push_back(std::move(op));
    };

    for (const auto& g : c.gates) {
        LoweredGate lg = decompose_gate(g);
        if (lg.frame_pauli)
            frame = mul_drop_phase(frame, *lg.frame_pauli);
        for (auto& op : lg.ops)
            push(std::move(op));
    }
    out.frame = std::move(frame);
    return out;
}

namespace {

bool support_fully_measured(const std::vector<PbcOp>& ops, size_t clifford_idx)
{
    for (uint32_t q : ops[clifford_idx].pauli.qubits()) {
        bool measured = false;
        for (size_t k = 0; k < clifford_idx && !measured; ++k)
            measured = ops[k].is_measurement() && ops[k].pauli.has(q);
        if (!measured)
            return false;
    }
    return true;
}

} // namespace

PbcCircuit prune(PbcCircuit circuit, size_t max_weight)
{
    if (max_weight < 1)
        throw std::invalid_argument("prune: max_weight must be >= 1");
    auto& ops = circuit.ops;

    // Right-to-left sweep: each Clifford is pushed as far right as it can go
    // before the one to its left is considered. Cliffords never pass each
    // other, so ops to the right of an already-settled Clifford are final
    // and a single sweep reaches the fixpoint.
    for (size_t idx = ops.size(); idx-- > 0;) {
        if (!ops[idx].is_clifford_rotation())
            continue;
        size_t j = idx;
        bool removed = false;
        while (j + 1 < ops.size()) {
            PbcOp& next = ops[j + 1];
            if (next.is_clifford_rotation()) {
                if (next.pauli == ops[j].pauli) {
                    bool cancel = next.angle != ops[j].angle;
                    PauliProduct p = ops[j].pauli;
                    ops.erase(ops.begin() + j, ops.begin() + j + 2);
                    if (!cancel) {
                        for (size_t k = j; k < ops.size(); ++k)
                            if (anticommutes(p, ops[k].pauli))
                                flip_op(ops[k]);
                        circuit.frame = mul_drop_phase(circuit.frame, p);
                    }
                    removed = true;
                }
                break;
            }
            if (anticommutes(ops[j].pauli, next.pauli)) {
                PbcOp transformed = commute_past(ops[j], next);
                if (transformed.pauli.weight() > max_weight)
                    break; // weight cap: this Clifford persists here
                PbcOp clifford = std::move(ops[j]);
                ops[j] = std::move(transformed);
                ops[j + 1] = std::move(clifford);
            } else {
                std::swap(ops[j], ops[j + 1]);
            }
            ++j;
        }
        if (!removed && j + 1 == ops.size() && support_fully_measured(ops, j))
            ops.erase(ops.begin() + j); // absorbed into the measurement layer
    }
    return circuit;
}

} // namespace hetec
