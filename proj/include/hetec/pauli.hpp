#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hetec {

enum class Axis : uint8_t { X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);

// Global phase i^k, k in {0,1,2,3}.
class Phase {
public:
    Phase() = default;
    explicit Phase(int i_exponent) : exp_(((i_exponent % 4) + 4) % 4) {}

    int i_exponent() const { return exp_; }
    bool is_real() const { return exp_ % 2 == 0; }

    Phase operator*(Phase other) const { return Phase(exp_ + other.exp_); }
    bool operator==(Phase other) const { return exp_ == other.exp_; }

private:
    int exp_ = 0;
};

// Sparse Pauli product: qubit index -> axis, identity factors omitted.
// Factors are kept sorted by qubit index.
class PauliProduct {
public:
    PauliProduct() = default;
    PauliProduct(std::initializer_list<std::pair<uint32_t, Axis>> factors);

    static PauliProduct single(uint32_t qubit, Axis axis);

    size_t weight() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    // Axis on `qubit`, or 0 cast back if identity. Returns nullptr-like
    // via the bool; use axis_at only after has().
    bool has(uint32_t qubit) const;
    Axis axis_at(uint32_t qubit) const;

    void set(uint32_t qubit, Axis axis);

    const std::vector<std::pair<uint32_t, Axis>>& factors() const { return factors_; }

    uint32_t max_qubit() const;
    std::vector<uint32_t> qubits() const;

    bool operator==(const PauliProduct& other) const { return factors_ == other.factors_; }
    bool operator!=(const PauliProduct& other) const { return factors_ != other.factors_; }
    bool operator<(const PauliProduct& other) const { return factors_ < other.factors_; }

    std::string str() const;

private:
    std::vector<std::pair<uint32_t, Axis>> factors_;
};

// Group product a*b with its global phase: a*b = i^k * result.
std::pair<Phase, PauliProduct> pauli_mul(const PauliProduct& a, const PauliProduct& b);

// True iff ab = -ba (odd number of differing non-identity positions).
bool anticommutes(const PauliProduct& a, const PauliProduct& b);

// Quantized rotation angles of the PBC model. Rotation(P, theta) = exp(-i*theta*P);
// |theta| = pi/4 is Clifford, |theta| = pi/8 is non-Clifford.
enum class Angle : uint8_t { PosQuarter, NegQuarter, PosEighth, NegEighth };

bool is_clifford_angle(Angle a);
Angle negated(Angle a);
double angle_radians(Angle a);
std::string angle_str(Angle a);

struct PbcOp {
    enum class Kind : uint8_t { Rotation, Measurement };

    Kind kind = Kind::Rotation;
    PauliProduct pauli;
    Angle angle = Angle::PosQuarter; // rotations only
    int sign = +1;                   // measurements only

    bool is_rotation() const { return kind == Kind::Rotation; }
    bool is_measurement() const { return kind == Kind::Measurement; }
    bool is_clifford_rotation() const { return is_rotation() && is_clifford_angle(angle); }

    static PbcOp rotation(PauliProduct p, Angle a);
    static PbcOp measurement(PauliProduct p, int sign = +1);

    bool operator==(const PbcOp& other) const;
};

size_t op_weight(const PbcOp& op);

// Ordered PBC program. `frame` is the residual Pauli layer standing after all
// listed ops (tracked classically; empty for most circuits).
struct PbcCircuit {
    uint32_t width = 0;
    std::vector<PbcOp> ops;
    PauliProduct frame;

    size_t clifford_count() const;
    size_t nonclifford_count() const;
    size_t measurement_count() const;
    size_t max_op_weight() const;

    bool operator==(const PbcCircuit& other) const;
};

// Line-oriented text format, one op per line:
//   PBC <width>
//   FRAME X0 Z2          (omitted when the frame is empty)
//   ROT -pi/8 Y0 X1
//   MEAS + Z0 Z3
std::string serialize_pbc(const PbcCircuit& c);
PbcCircuit parse_pbc(const std::string& text);

} // namespace hetec
