#include "hetec/circuit.hpp"

#include <random>

namespace hetec {

namespace {

struct BenchBuilder {
    LogicalCircuit circ;
    BenchmarkKind kind;
    uint32_t word_len;
    size_t rotation_sites = 0;
    bool emit; // false: only count rotation sites

    BenchBuilder(BenchmarkKind k, uint32_t n, uint32_t len, bool emit) : kind(k), word_len(len), emit(emit)
    {
        circ.width = n;
    }

    void gate(GateKind g, uint32_t q)
    {
        if (emit)
            circ.gates.push_back(Gate::one(g, q));
    }

    void cx(uint32_t c, uint32_t t)
    {
        if (emit)
            circ.gates.push_back(Gate::cx(c, t));
    }

    // Deterministic Clifford+T word standing in for one phase rotation:
    // word_len T gates, each preceded by a pseudo-random H or S, seeded by
    // (benchmark kind, rotation site index).
    void rz_word(uint32_t q)
    {
        size_t site = rotation_sites++;
        if (!emit)
            return;
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(kind) << 56) ^ site);
        for (uint32_t k = 0; k < word_len; ++k) {
            circ.gates.push_back(Gate::one(rng() % 2 == 0 ? GateKind::H : GateKind::S, q));
            circ.gates.push_back(Gate::one(GateKind::T, q));
        }
    }

    // Controlled-phase block: Rz(c), Rz(t), CX, Rz(t), CX.
    void cphase(uint32_t c, uint32_t t)
    {
        rz_word(c);
        rz_word(t);
        cx(c, t);
        rz_word(t);
        cx(c, t);
    }

    void qft_layer(uint32_t lo, uint32_t hi, bool inverse)
    {
        // Swap-free QFT on qubits [lo, hi).
        if (!inverse) {
            for (uint32_t i = lo; i < hi; ++i) {
                gate(GateKind::H, i);
                for (uint32_t j = i + 1; j < hi; ++j)
                    cphase(j, i);
            }
        } else {
            for (uint32_t i = hi; i-- > lo;) {
                for (uint32_t j = hi; j-- > i + 1;)
                    cphase(j, i);
                gate(GateKind::H, i);
            }
        }
    }

    void measure_all()
    {
        if (!emit)
            return;
        for (uint32_t q = 0; q < circ.width; ++q)
            circ.gates.push_back(Gate::one(GateKind::MeasureZ, q));
    }
};

void build(BenchBuilder& b, uint32_t n)
{
    switch (b.kind) {
        case BenchmarkKind::Ising: {
            // One layer of nearest-neighbour ZZ interactions.
            for (uint32_t i = 0; i + 1 < n; ++i) {
                b.cx(i, i + 1);
                b.rz_word(i + 1);
                b.cx(i, i + 1);
            }
            break;
        }
        case BenchmarkKind::Qft: {
            b.qft_layer(0, n, false);
            break;
        }
        case BenchmarkKind::Adder: {
            // Draper adder: a-register [0, m), b-register [m, n) held in the
            // Fourier basis while controlled phases accumulate the sum.
            uint32_t m = n / 2;
            uint32_t k = n - m;
            b.qft_layer(m, n, false);
            for (uint32_t i = 0; i < k; ++i)
                for (uint32_t j = 0; j <= i && j < m; ++j)
                    b.cphase(j, m + i);
            b.qft_layer(m, n, true);
            break;
        }
    }
    b.measure_all();
}

std::string bench_name(BenchmarkKind kind, uint32_t n)
{
    switch (kind) {
        case BenchmarkKind::Adder: return "adder_" + std::to_string(n);
        case BenchmarkKind::Qft: return "qft_" + std::to_string(n);
        case BenchmarkKind::Ising: return "ising_" + std::to_string(n);
    }
    return "bench";
}

} // namespace

LogicalCircuit gen_benchmark(BenchmarkKind kind, uint32_t n, uint32_t rz_word_len)
{
    if (n < 2)
        throw std::invalid_argument("benchmark needs n >= 2");
    if (rz_word_len < 1)
        throw std::invalid_argument("rz_word_len must be >= 1");
    BenchBuilder b(kind, n, rz_word_len, /*emit=*/true);
    build(b, n);
    b.circ.name = bench_name(kind, n);
    validate(b.circ);
    return b.circ;
}

size_t benchmark_rotation_count(BenchmarkKind kind, uint32_t n)
{
    BenchBuilder b(kind, n, 1, /*emit=*/false);
    build(b, n);
    return b.rotation_sites;
}

} // namespace hetec
