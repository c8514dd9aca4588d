#include "hetec/cost_model.hpp"
#include "hetec/scheduler.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hetec {

using nlohmann::json;

BusParams bus_params(BusVariant v)
{
    switch (v) {
        case BusVariant::MonoLayer: return {103, 7};
        case BusVariant::Ssip: return {180, 12};
        case BusVariant::Ckbb: return {1380, 12};
    }
    throw std::invalid_argument("unknown bus variant");
}

BusVariant bus_variant_from_name(const std::string& name)
{
    if (name == "mono")
        return BusVariant::MonoLayer;
    if (name == "ssip")
        return BusVariant::Ssip;
    if (name == "ckbb")
        return BusVariant::Ckbb;
    throw std::invalid_argument("unknown bus variant '" + name + "' (expected mono|ssip|ckbb)");
}

std::string bus_variant_name(BusVariant v)
{
    switch (v) {
        case BusVariant::MonoLayer: return "mono";
        case BusVariant::Ssip: return "ssip";
        case BusVariant::Ckbb: return "ckbb";
    }
    return "?";
}

double surface_clifford_error(double p, uint32_t d, const CostTable& table)
{
    if (p <= 0 || p >= 1 || d < 1)
        throw std::domain_error("surface_clifford_error: need 0 < p < 1 and d >= 1");
    return table.surface_a * std::pow(p / table.surface_p0, (d + 1) / 2.0);
}

double surface_nonclifford_error(double p, uint32_t d, size_t w, bool doubled,
                                 const CostTable& table)
{
    if (w < 1)
        throw std::domain_error("surface_nonclifford_error: need w >= 1");
    return static_cast<double>(w) * surface_clifford_error(p, d, table) * (doubled ? 2.0 : 1.0);
}

namespace {

const std::array<double, 3> kGrossAnchorsP = {1e-3, 1e-4, 1e-5};

const std::array<double, 3>& anchor_row(GrossOpKind kind, const CostTable& table)
{
    switch (kind) {
        case GrossOpKind::CliffordRotation: return table.gross_clifford_rotation;
        case GrossOpKind::Automorphism: return table.gross_automorphism;
        case GrossOpKind::Measurement: return table.gross_measurement;
        case GrossOpKind::JointXX: return table.gross_joint_xx;
    }
    throw std::invalid_argument("unknown gross op kind");
}

} // namespace

double gross_op_error(GrossOpKind kind, double p, const CostTable& table)
{
    if (p <= 0 || p > kGrossAnchorsP[0])
        throw std::domain_error("gross_op_error: p must be in (0, 1e-3]");
    const auto& row = anchor_row(kind, table);
    for (size_t i = 0; i < 3; ++i)
        if (p == kGrossAnchorsP[i])
            return row[i];
    // Log-log linear between anchors; extrapolate on the last segment below.
    size_t hi = p > kGrossAnchorsP[1] ? 0 : 1;
    if (p < kGrossAnchorsP[2]) {
        hi = 1;
        std::cerr << "warning: gross_op_error extrapolating below p=1e-5 (p=" << p << ")\n";
    }
    double lp0 = std::log(kGrossAnchorsP[hi]), lp1 = std::log(kGrossAnchorsP[hi + 1]);
    double le0 = std::log(row[hi]), le1 = std::log(row[hi + 1]);
    double t = (std::log(p) - lp1) / (lp0 - lp1);
    return std::exp(le1 + t * (le0 - le1));
}

void ArchitectureConfig::check() const
{
    if (surface_tiles < 1)
        throw std::invalid_argument("architecture needs at least one surface tile");
    if (distance < 3 || distance % 2 == 0)
        throw std::invalid_argument("surface distance must be odd and >= 3");
    if (p <= 0 || p >= 1)
        throw std::invalid_argument("physical error rate must be in (0,1)");
    if (block_capacity < 1 || block_capacity > group.order() - 1)
        throw std::invalid_argument("block capacity must be in [1, group order - 1]");
}

int64_t physical_qubits(const ArchitectureConfig& arch)
{
    BusParams bus = bus_params(arch.bus);
    int64_t per_block = static_cast<int64_t>(arch.qubits_per_block) + bus.ancilla_qubits;
    int64_t surface_portion =
        std::llround(arch.surface_tiles * arch.c_tile * arch.routing_factor);
    return static_cast<int64_t>(arch.gross_blocks) * per_block + surface_portion;
}

int64_t homogeneous_physical_qubits(uint32_t n_qubits, const ArchitectureConfig& arch)
{
    return std::llround(n_qubits * arch.homog_qubits_per_logical);
}

uint32_t block_count(uint32_t n_qubits, uint32_t surface_tiles, uint32_t capacity)
{
    if (n_qubits == 0)
        throw std::invalid_argument("block_count: need n > 0");
    if (n_qubits <= surface_tiles)
        return 0;
    uint32_t overflow = n_qubits - surface_tiles;
    return (overflow + capacity - 1) / capacity;
}

ErrorBreakdown estimate_circuit(const Schedule& schedule, bool product_mode)
{
    ErrorBreakdown out;
    double survive = 1.0;
    for (const auto& ev : schedule.events) {
        switch (ev.category) {
            case ErrorCategory::IO: out.io += ev.error_contribution; break;
            case ErrorCategory::Clifford: out.clifford += ev.error_contribution; break;
            case ErrorCategory::NonClifford: out.non_clifford += ev.error_contribution; break;
        }
        survive *= 1.0 - ev.error_contribution;
    }
    out.total = product_mode ? 1.0 - survive : out.io + out.clifford + out.non_clifford;
    out.cycles = schedule.total_cycles;
    return out;
}

// ---- JSON ----

namespace {

json times_to_json(const GrossTimes& t)
{
    return json{{"automorphism", t.automorphism},
                {"joint_xx", t.joint_xx},
                {"z_measure", t.z_measure},
                {"clifford_rotation", t.clifford_rotation}};
}

GrossTimes times_from_json(const json& j)
{
    GrossTimes t;
    t.automorphism = j.value("automorphism", t.automorphism);
    t.joint_xx = j.value("joint_xx", t.joint_xx);
    t.z_measure = j.value("z_measure", t.z_measure);
    t.clifford_rotation = j.value("clifford_rotation", t.clifford_rotation);
    return t;
}

json table_to_json(const CostTable& t)
{
    return json{{"gross_clifford_rotation", t.gross_clifford_rotation},
                {"gross_automorphism", t.gross_automorphism},
                {"gross_measurement", t.gross_measurement},
                {"gross_joint_xx", t.gross_joint_xx},
                {"surface_a", t.surface_a},
                {"surface_p0", t.surface_p0},
                {"gross_times", times_to_json(t.gross_times)}};
}

CostTable table_from_json(const json& j)
{
    CostTable t;
    if (j.contains("gross_clifford_rotation"))
        j.at("gross_clifford_rotation").get_to(t.gross_clifford_rotation);
    if (j.contains("gross_automorphism"))
        j.at("gross_automorphism").get_to(t.gross_automorphism);
    if (j.contains("gross_measurement"))
        j.at("gross_measurement").get_to(t.gross_measurement);
    if (j.contains("gross_joint_xx"))
        j.at("gross_joint_xx").get_to(t.gross_joint_xx);
    t.surface_a = j.value("surface_a", t.surface_a);
    t.surface_p0 = j.value("surface_p0", t.surface_p0);
    if (j.contains("gross_times"))
        t.gross_times = times_from_json(j.at("gross_times"));
    return t;
}

std::string basis_name(RouteBasis b)
{
    switch (b) {
        case RouteBasis::X: return "x";
        case RouteBasis::Z: return "z";
        case RouteBasis::Both: return "both";
    }
    return "?";
}

RouteBasis basis_from_name(const std::string& s)
{
    if (s == "x")
        return RouteBasis::X;
    if (s == "z")
        return RouteBasis::Z;
    if (s == "both")
        return RouteBasis::Both;
    throw std::invalid_argument("unknown route basis '" + s + "'");
}

json omega_to_json(const GeneratorSet& omega)
{
    json arr = json::array();
    for (const auto& g : omega.generators)
        arr.push_back({{"i", g.label.i}, {"j", g.label.j}, {"basis", basis_name(g.basis)}});
    return arr;
}

GeneratorSet omega_from_json(const json& arr)
{
    GeneratorSet omega;
    for (const auto& g : arr) {
        GeneratorSet::Generator gen;
        gen.label.i = g.at("i").get<uint32_t>();
        gen.label.j = g.at("j").get<uint32_t>();
        gen.basis = basis_from_name(g.value("basis", std::string("both")));
        omega.generators.push_back(gen);
    }
    return omega;
}

} // namespace

std::string CostTable::to_json() const
{
    return table_to_json(*this).dump(2) + "\n";
}

CostTable CostTable::from_json(const std::string& text)
{
    return table_from_json(json::parse(text));
}

CostTable CostTable::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open cost table file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string ArchitectureConfig::to_json() const
{
    json j{{"surface_tiles", surface_tiles},
           {"distance", distance},
           {"gross_blocks", gross_blocks},
           {"block_capacity", block_capacity},
           {"bus", bus_variant_name(bus)},
           {"p", p},
           {"qubits_per_block", qubits_per_block},
           {"c_tile", c_tile},
           {"routing_factor", routing_factor},
           {"homog_qubits_per_logical", homog_qubits_per_logical},
           {"nonclifford_doubled", nonclifford_doubled},
           {"in_memory_clifford_multiplier", in_memory_clifford_multiplier},
           {"idle_error_per_cycle", idle_error_per_cycle},
           {"product_mode", product_mode},
           {"sync_mode", sync_mode},
           {"group", {{"l", group.l}, {"m", group.m}}},
           {"omega", omega_to_json(omega)},
           {"cost", table_to_json(cost)}};
    return j.dump(2) + "\n";
}

ArchitectureConfig ArchitectureConfig::from_json(const std::string& text)
{
    json j = json::parse(text);
    ArchitectureConfig a;
    a.surface_tiles = j.value("surface_tiles", a.surface_tiles);
    a.distance = j.value("distance", a.distance);
    a.gross_blocks = j.value("gross_blocks", a.gross_blocks);
    a.block_capacity = j.value("block_capacity", a.block_capacity);
    if (j.contains("bus"))
        a.bus = bus_variant_from_name(j.at("bus").get<std::string>());
    a.p = j.value("p", a.p);
    a.qubits_per_block = j.value("qubits_per_block", a.qubits_per_block);
    a.c_tile = j.value("c_tile", a.c_tile);
    a.routing_factor = j.value("routing_factor", a.routing_factor);
    a.homog_qubits_per_logical = j.value("homog_qubits_per_logical", a.homog_qubits_per_logical);
    a.nonclifford_doubled = j.value("nonclifford_doubled", a.nonclifford_doubled);
    a.in_memory_clifford_multiplier =
        j.value("in_memory_clifford_multiplier", a.in_memory_clifford_multiplier);
    a.idle_error_per_cycle = j.value("idle_error_per_cycle", a.idle_error_per_cycle);
    a.product_mode = j.value("product_mode", a.product_mode);
    a.sync_mode = j.value("sync_mode", a.sync_mode);
    if (j.contains("group")) {
        a.group.l = j.at("group").value("l", a.group.l);
        a.group.m = j.at("group").value("m", a.group.m);
    }
    if (j.contains("omega"))
        a.omega = omega_from_json(j.at("omega"));
    if (j.contains("cost"))
        a.cost = table_from_json(j.at("cost"));
    a.check();
    return a;
}

ArchitectureConfig ArchitectureConfig::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open architecture file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

} // namespace hetec
