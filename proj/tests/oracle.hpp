#pragma once

// Dense-matrix reference implementations used only by the tests. Everything
// here is deliberately brute force; the library must agree with it.

#include "hetec/circuit.hpp"
#include "hetec/pauli.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat kron(const Mat& a, const Mat& b)
{
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Mat pauli1(hetec::Axis a)
{
    Mat m(2, 2);
    switch (a) {
        case hetec::Axis::X: m << 0, 1, 1, 0; break;
        case hetec::Axis::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
        case hetec::Axis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Qubit 0 is the leftmost tensor factor.
inline Mat pauli_matrix(const hetec::PauliProduct& p, uint32_t width)
{
    Mat out = Mat::Identity(1, 1);
    for (uint32_t q = 0; q < width; ++q)
        out = kron(out, p.has(q) ? pauli1(p.axis_at(q)) : Mat::Identity(2, 2));
    return out;
}

// exp(-i theta P) = cos(theta) I - i sin(theta) P
inline Mat rotation_matrix(const hetec::PauliProduct& p, double theta, uint32_t width)
{
    Eigen::Index dim = Eigen::Index(1) << width;
    return std::cos(theta) * Mat::Identity(dim, dim) -
           cd(0, 1) * std::sin(theta) * pauli_matrix(p, width);
}

inline Mat pbc_unitary(const hetec::PbcCircuit& c)
{
    Eigen::Index dim = Eigen::Index(1) << c.width;
    Mat u = Mat::Identity(dim, dim);
    for (const auto& op : c.ops) {
        if (!op.is_rotation())
            throw std::logic_error("pbc_unitary: measurements are not unitary");
        u = rotation_matrix(op.pauli, hetec::angle_radians(op.angle), c.width) * u;
    }
    if (!c.frame.empty())
        u = pauli_matrix(c.frame, c.width) * u;
    return u;
}

inline Mat gate_unitary(const hetec::Gate& g, uint32_t width)
{
    using hetec::GateKind;
    Eigen::Index dim = Eigen::Index(1) << width;
    if (g.kind == GateKind::CX) {
        Mat u = Mat::Zero(dim, dim);
        uint32_t c = g.qubits[0], t = g.qubits[1];
        for (Eigen::Index basis = 0; basis < dim; ++basis) {
            // qubit 0 = most significant bit
            bool cbit = (basis >> (width - 1 - c)) & 1;
            Eigen::Index to = cbit ? basis ^ (Eigen::Index(1) << (width - 1 - t)) : basis;
            u(to, basis) = 1;
        }
        return u;
    }
    Mat m(2, 2);
    const cd i(0, 1);
    switch (g.kind) {
        case GateKind::H: m << 1, 1, 1, -1; m /= std::sqrt(2.0); break;
        case GateKind::S: m << 1, 0, 0, i; break;
        case GateKind::Sdg: m << 1, 0, 0, -i; break;
        case GateKind::T: m << 1, 0, 0, std::exp(i * (M_PI / 4)); break;
        case GateKind::Tdg: m << 1, 0, 0, std::exp(-i * (M_PI / 4)); break;
        case GateKind::X: m = pauli1(hetec::Axis::X); break;
        case GateKind::Y: m = pauli1(hetec::Axis::Y); break;
        case GateKind::Z: m = pauli1(hetec::Axis::Z); break;
        default: throw std::logic_error("gate_unitary: non-unitary gate");
    }
    Mat u = Mat::Identity(1, 1);
    for (uint32_t q = 0; q < width; ++q)
        u = kron(u, q == g.qubits[0] ? m : Mat::Identity(2, 2));
    return u;
}

inline Mat circuit_unitary(const hetec::LogicalCircuit& c)
{
    Eigen::Index dim = Eigen::Index(1) << c.width;
    Mat u = Mat::Identity(dim, dim);
    for (const auto& g : c.gates)
        u = gate_unitary(g, c.width) * u;
    return u;
}

// Max |a - b| after aligning global phase on the largest entry of a.
inline double phase_aligned_distance(const Mat& a, const Mat& b)
{
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(a(r, c)) < 1e-12 || std::abs(b(r, c)) < 1e-12)
        return (a - b).cwiseAbs().maxCoeff();
    cd scale = a(r, c) / b(r, c);
    if (std::abs(std::abs(scale) - 1.0) > 1e-9)
        return (a - scale * b).cwiseAbs().maxCoeff() + std::abs(std::abs(scale) - 1.0);
    return (a - scale * b).cwiseAbs().maxCoeff();
}

// Random Clifford+T circuit without measurements.
inline hetec::LogicalCircuit random_circuit(std::mt19937_64& rng, uint32_t max_qubits,
                                            size_t max_gates)
{
    using hetec::GateKind;
    static const GateKind one_q[] = {GateKind::H, GateKind::S,   GateKind::Sdg,
                                     GateKind::T, GateKind::Tdg, GateKind::X,
                                     GateKind::Y, GateKind::Z};
    hetec::LogicalCircuit c;
    c.width = std::uniform_int_distribution<uint32_t>(1, max_qubits)(rng);
    size_t n_gates = std::uniform_int_distribution<size_t>(1, max_gates)(rng);
    for (size_t i = 0; i < n_gates; ++i) {
        if (c.width >= 2 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
            uint32_t a = std::uniform_int_distribution<uint32_t>(0, c.width - 1)(rng);
            uint32_t b = std::uniform_int_distribution<uint32_t>(0, c.width - 2)(rng);
            if (b >= a)
                ++b;
            c.gates.push_back(hetec::Gate::cx(a, b));
        } else {
            c.gates.push_back(hetec::Gate::one(
                one_q[std::uniform_int_distribution<size_t>(0, std::size(one_q) - 1)(rng)],
                std::uniform_int_distribution<uint32_t>(0, c.width - 1)(rng)));
        }
    }
    return c;
}

} // namespace oracle
