#include "hetec/pauli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hetec {

char axis_char(Axis a)
{
    switch (a) {
        case Axis::X: return 'X';
        case Axis::Y: return 'Y';
        case Axis::Z: return 'Z';
    }
    return '?';
}

PauliProduct::PauliProduct(std::initializer_list<std::pair<uint32_t, Axis>> factors)
{
    for (const auto& [q, a] : factors)
        set(q, a);
}

PauliProduct PauliProduct::single(uint32_t qubit, Axis axis)
{
    PauliProduct p;
    p.set(qubit, axis);
    return p;
}

bool PauliProduct::has(uint32_t qubit) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), qubit,
                               [](const auto& f, uint32_t q) { return f.first < q; });
    return it != factors_.end() && it->first == qubit;
}

Axis PauliProduct::axis_at(uint32_t qubit) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), qubit,
                               [](const auto& f, uint32_t q) { return f.first < q; });
    if (it == factors_.end() || it->first != qubit)
        throw std::out_of_range("PauliProduct: identity factor at qubit " + std::to_string(qubit));
    return it->second;
}

void PauliProduct::set(uint32_t qubit, Axis axis)
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), qubit,
                               [](const auto& f, uint32_t q) { return f.first < q; });
    if (it != factors_.end() && it->first == qubit)
        it->second = axis;
    else
        factors_.insert(it, {qubit, axis});
}

uint32_t PauliProduct::max_qubit() const
{
    if (factors_.empty())
        throw std::logic_error("PauliProduct::max_qubit on empty product");
    return factors_.back().first;
}

std::vector<uint32_t> PauliProduct::qubits() const
{
    std::vector<uint32_t> qs;
    qs.reserve(factors_.size());
    for (const auto& [q, a] : factors_)
        qs.push_back(q);
    return qs;
}

std::string PauliProduct::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, a] : factors_) {
        if (!first)
            os << ' ';
        os << axis_char(a) << q;
        first = false;
    }
    return os.str();
}

namespace {

// Single-qubit product a*b = i^k * c. Returns {k, c}; c == 0 means identity.
std::pair<int, int> single_mul(Axis a, Axis b)
{
    if (a == b)
        return {0, 0};
    // Cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i.
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    // Axis values X=1, Y=2, Z=3: the missing axis is 6 - ia - ib.
    int ic = 6 - ia - ib;
    bool forward = (ia == 1 && ib == 2) || (ia == 2 && ib == 3) || (ia == 3 && ib == 1);
    return {forward ? 1 : 3, ic};
}

} // namespace

std::pair<Phase, PauliProduct> pauli_mul(const PauliProduct& a, const PauliProduct& b)
{
    PauliProduct out;
    int iexp = 0;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.set(ia->first, ia->second);
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            out.set(ib->first, ib->second);
            ++ib;
        } else {
            auto [k, c] = single_mul(ia->second, ib->second);
            iexp += k;
            if (c != 0)
                out.set(ia->first, static_cast<Axis>(c));
            ++ia;
            ++ib;
        }
    }
    return {Phase(iexp), out};
}

bool anticommutes(const PauliProduct& a, const PauliProduct& b)
{
    size_t differing = 0;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            if (ia->second != ib->second)
                ++differing;
            ++ia;
            ++ib;
        }
    }
    return differing % 2 == 1;
}

bool is_clifford_angle(Angle a)
{
    return a == Angle::PosQuarter || a == Angle::NegQuarter;
}

Angle negated(Angle a)
{
    switch (a) {
        case Angle::PosQuarter: return Angle::NegQuarter;
        case Angle::NegQuarter: return Angle::PosQuarter;
        case Angle::PosEighth: return Angle::NegEighth;
        case Angle::NegEighth: return Angle::PosEighth;
    }
    return a;
}

double angle_radians(Angle a)
{
    constexpr double kPi = 3.14159265358979323846;
    switch (a) {
        case Angle::PosQuarter: return kPi / 4;
        case Angle::NegQuarter: return -kPi / 4;
        case Angle::PosEighth: return kPi / 8;
        case Angle::NegEighth: return -kPi / 8;
    }
    return 0;
}

std::string angle_str(Angle a)
{
    switch (a) {
        case Angle::PosQuarter: return "pi/4";
        case Angle::NegQuarter: return "-pi/4";
        case Angle::PosEighth: return "pi/8";
        case Angle::NegEighth: return "-pi/8";
    }
    return "?";
}

PbcOp PbcOp::rotation(PauliProduct p, Angle a)
{
    PbcOp op;
    op.kind = Kind::Rotation;
    op.pauli = std::move(p);
    op.angle = a;
    return op;
}

PbcOp PbcOp::measurement(PauliProduct p, int sign)
{
    PbcOp op;
    op.kind = Kind::Measurement;
    op.pauli = std::move(p);
    op.sign = sign;
    return op;
}

bool PbcOp::operator==(const PbcOp& other) const
{
    if (kind != other.kind || pauli != other.pauli)
        return false;
    return kind == Kind::Rotation ? angle == other.angle : sign == other.sign;
}

size_t op_weight(const PbcOp& op)
{
    return op.pauli.weight();
}

size_t PbcCircuit::clifford_count() const
{
    size_t n = 0;
    for (const auto& op : ops)
        if (op.is_clifford_rotation())
            ++n;
    return n;
}

size_t PbcCircuit::nonclifford_count() const
{
    size_t n = 0;
    for (const auto& op : ops)
        if (op.is_rotation() && !is_clifford_angle(op.angle))
            ++n;
    return n;
}

size_t PbcCircuit::measurement_count() const
{
    size_t n = 0;
    for (const auto& op : ops)
        if (op.is_measurement())
            ++n;
    return n;
}

size_t PbcCircuit::max_op_weight() const
{
    size_t w = 0;
    for (const auto& op : ops)
        w = std::max(w, op_weight(op));
    return w;
}

bool PbcCircuit::operator==(const PbcCircuit& other) const
{
    return width == other.width && ops == other.ops && frame == other.frame;
}

std::string serialize_pbc(const PbcCircuit& c)
{
    std::ostringstream os;
    os << "PBC " << c.width << '\n';
    if (!c.frame.empty())
        os << "FRAME " << c.frame.str() << '\n';
    for (const auto& op : c.ops) {
        if (op.is_rotation())
            os << "ROT " << angle_str(op.angle) << ' ' << op.pauli.str() << '\n';
        else
            os << "MEAS " << (op.sign > 0 ? '+' : '-') << ' ' << op.pauli.str() << '\n';
    }
    return os.str();
}

namespace {

PauliProduct parse_factors(std::istringstream& is, const std::string& line)
{
    PauliProduct p;
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2)
            throw std::runtime_error("bad pauli factor '" + tok + "' in line: " + line);
        Axis a;
        switch (tok[0]) {
            case 'X': a = Axis::X; break;
            case 'Y': a = Axis::Y; break;
            case 'Z': a = Axis::Z; break;
            default: throw std::runtime_error("bad pauli axis in '" + tok + "'");
        }
        p.set(static_cast<uint32_t>(std::stoul(tok.substr(1))), a);
    }
    if (p.empty())
        throw std::runtime_error("empty pauli product in line: " + line);
    return p;
}

Angle parse_angle(const std::string& s)
{
    if (s == "pi/4") return Angle::PosQuarter;
    if (s == "-pi/4") return Angle::NegQuarter;
    if (s == "pi/8") return Angle::PosEighth;
    if (s == "-pi/8") return Angle::NegEighth;
    throw std::runtime_error("bad angle '" + s + "'");
}

} // namespace

PbcCircuit parse_pbc(const std::string& text)
{
    PbcCircuit c;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream is(line);
        std::string kw;
        is >> kw;
        if (kw == "PBC") {
            if (!(is >> c.width))
                throw std::runtime_error("bad PBC header: " + line);
            header_seen = true;
        } else if (kw == "FRAME") {
            c.frame = parse_factors(is, line);
        } else if (kw == "ROT") {
            std::string ang;
            is >> ang;
            c.ops.push_back(PbcOp::rotation(parse_factors(is, line), parse_angle(ang)));
        } else if (kw == "MEAS") {
            std::string sign;
            is >> sign;
            if (sign != "+" && sign != "-")
                throw std::runtime_error("bad measurement sign in line: " + line);
            c.ops.push_back(PbcOp::measurement(parse_factors(is, line), sign == "+" ? +1 : -1));
        } else {
            throw std::runtime_error("unknown PBC line: " + line);
        }
    }
    if (!header_seen)
        throw std::runtime_error("missing PBC header");
    return c;
}

} // namespace hetec
