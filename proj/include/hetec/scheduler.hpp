#pragma once

#include "hetec/cost_model.hpp"
#include "hetec/memory.hpp"
#include "hetec/pauli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hetec {

struct SurfaceTile {
    uint32_t index;
    bool operator==(const SurfaceTile&) const = default;
};

struct GrossSlot {
    uint32_t block;
    MonomialLabel label;
    bool operator==(const GrossSlot&) const = default;
};

using Location = std::variant<SurfaceTile, GrossSlot>;

// Per-logical-qubit residency map.
struct Placement {
    std::vector<Location> locations; // indexed by logical qubit

    bool on_surface(uint32_t q) const;
    std::optional<uint32_t> tile_of(uint32_t q) const;
    std::optional<GrossSlot> slot_of(uint32_t q) const;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EventKind : uint8_t {
    SurfaceClifford,
    SurfaceNonClifford,
    SurfaceMeasure,
    InMemoryClifford,
    Automorphism,
    Fetch,
    Store,
    GrossMeasure,
    Idle, // aggregate idling contribution (only with idle_error_per_cycle > 0)
};

std::string event_kind_name(EventKind k);

struct ScheduleEvent {
    EventKind kind = EventKind::SurfaceClifford;
    std::vector<uint32_t> qubits;
    std::vector<std::string> resources; // "tile3", "block0", "bus"
    int64_t start_cycle = 0;
    int64_t duration_cycles = 0;
    double error_contribution = 0;
    ErrorCategory category = ErrorCategory::Clifford;
};

struct Schedule {
    std::vector<ScheduleEvent> events; // ordered by start_cycle
    int64_t total_cycles = 0;
    size_t io_count = 0;
    double error_io = 0;
    double error_clifford = 0;
    double error_nonclifford = 0;
    Placement final_placement;

    // FNV-1a over the event list; used for determinism checks.
    uint64_t event_hash() const;
};

// Qubits of the earliest schedulable ops fill the S tiles; the rest fill
// gross slots in order of first pending use. Deterministic given seed.
Placement initial_placement(const PbcCircuit& circuit, const ArchitectureConfig& arch,
                            uint64_t seed);

// Greedy DAG-frontier scheduler over the heterogeneous architecture.
Schedule schedule(const PbcCircuit& circuit, const ArchitectureConfig& arch, uint64_t seed);

struct ScheduleStats {
    std::map<EventKind, size_t> kind_counts;
    size_t io_count = 0;
    int64_t cycles = 0;
    double error_io = 0;
    double error_clifford = 0;
    double error_nonclifford = 0;
    size_t event_count = 0;
};

ScheduleStats schedule_stats(const Schedule& s);

std::string schedule_to_json(const Schedule& s);
std::string schedule_to_csv(const Schedule& s);

} // namespace hetec
