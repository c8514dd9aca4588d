#include "hetec/scheduler.hpp"

#include "hetec/circuit.hpp"
#include "hetec/transpile.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace hetec {

bool Placement::on_surface(uint32_t q) const
{
    return std::holds_alternative<SurfaceTile>(locations.at(q));
}

std::optional<uint32_t> Placement::tile_of(uint32_t q) const
{
    if (auto* t = std::get_if<SurfaceTile>(&locations.at(q)))
        return t->index;
    return std::nullopt;
}

std::optional<GrossSlot> Placement::slot_of(uint32_t q) const
{
    if (auto* s = std::get_if<GrossSlot>(&locations.at(q)))
        return *s;
    return std::nullopt;
}

std::string event_kind_name(EventKind k)
{
    switch (k) {
        case EventKind::SurfaceClifford: return "surface_clifford";
        case EventKind::SurfaceNonClifford: return "surface_nonclifford";
        case EventKind::SurfaceMeasure: return "surface_measure";
        case EventKind::InMemoryClifford: return "in_memory_clifford";
        case EventKind::Automorphism: return "automorphism";
        case EventKind::Fetch: return "fetch";
        case EventKind::Store: return "store";
        case EventKind::GrossMeasure: return "gross_measure";
        case EventKind::Idle: return "idle";
    }
    return "?";
}

uint64_t Schedule::event_hash() const
{
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& ev : events) {
        mix(static_cast<uint64_t>(ev.kind));
        for (uint32_t q : ev.qubits)
            mix(q);
        mix(static_cast<uint64_t>(ev.start_cycle));
        mix(static_cast<uint64_t>(ev.duration_cycles));
        uint64_t bits;
        static_assert(sizeof(bits) == sizeof(ev.error_contribution));
        std::memcpy(&bits, &ev.error_contribution, sizeof(bits));
        mix(bits);
    }
    return h;
}

namespace {

std::vector<size_t> first_use_order(const PbcCircuit& circuit)
{
    constexpr size_t kNever = std::numeric_limits<size_t>::max();
    std::vector<size_t> first_use(circuit.width, kNever);
    for (size_t i = 0; i < circuit.ops.size(); ++i)
        for (uint32_t q : circuit.ops[i].pauli.qubits())
            if (first_use[q] == kNever)
                first_use[q] = i;
    std::vector<size_t> order(circuit.width);
    for (uint32_t q = 0; q < circuit.width; ++q)
        order[q] = q;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return first_use[a] < first_use[b]; });
    return order;
}

} // namespace

Placement initial_placement(const PbcCircuit& circuit, const ArchitectureConfig& arch,
                            uint64_t /*seed*/)
{
    arch.check();
    uint64_t total_capacity = static_cast<uint64_t>(arch.surface_tiles) +
                              static_cast<uint64_t>(arch.gross_blocks) * arch.block_capacity;
    if (circuit.width > total_capacity)
        throw CapacityError("circuit width " + std::to_string(circuit.width) +
                            " exceeds architecture capacity " + std::to_string(total_capacity));

    Placement placement;
    placement.locations.resize(circuit.width, SurfaceTile{0});
    auto order = first_use_order(circuit);
    for (size_t rank = 0; rank < order.size(); ++rank) {
        uint32_t q = static_cast<uint32_t>(order[rank]);
        if (rank < arch.surface_tiles) {
            placement.locations[q] = SurfaceTile{static_cast<uint32_t>(rank)};
        } else {
            size_t mem_rank = rank - arch.surface_tiles;
            uint32_t block = static_cast<uint32_t>(mem_rank / arch.block_capacity);
            uint32_t slot_idx = static_cast<uint32_t>(mem_rank % arch.block_capacity);
            placement.locations[q] = GrossSlot{block, label_of_index(slot_idx, arch.group)};
        }
    }
    return placement;
}

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

struct SchedulerState {
    const PbcCircuit& circuit;
    const ArchitectureConfig& arch;
    Schedule out;
    Placement placement;
    std::vector<GrossBlock> blocks;
    std::vector<std::optional<uint32_t>> tile_occupant;
    std::vector<int64_t> tile_free;
    std::vector<int64_t> block_free;
    int64_t bus_free = 0;
    std::vector<int64_t> qubit_ready;
    std::vector<int64_t> qubit_busy; // summed busy cycles, for idle accrual

    std::vector<std::vector<size_t>> succ;
    std::vector<size_t> indeg;
    std::set<size_t> frontier;
    std::vector<bool> done;
    std::vector<std::vector<size_t>> uses; // per qubit: op indices in order
    std::vector<size_t> use_cursor;
    size_t remaining = 0;

    GrossTimes times;
    double e_sc, e_auto, e_xx, e_zmeas, e_gclif, e_gmeas;
    int64_t in_memory_cycles;
    std::mt19937_64 rng;

    SchedulerState(const PbcCircuit& c, const ArchitectureConfig& a, uint64_t seed)
        : circuit(c), arch(a), rng(seed)
    {
        placement = initial_placement(c, a, seed);
        times = a.cost.gross_times;
        if (a.bus != BusVariant::MonoLayer) {
            int64_t rounds = bus_params(a.bus).measurement_rounds;
            times.joint_xx = rounds;
            times.z_measure = rounds;
        }
        e_sc = surface_clifford_error(a.p, a.distance, a.cost);
        e_auto = gross_op_error(GrossOpKind::Automorphism, a.p, a.cost);
        e_xx = gross_op_error(GrossOpKind::JointXX, a.p, a.cost);
        e_zmeas = gross_op_error(GrossOpKind::Measurement, a.p, a.cost);
        e_gclif = gross_op_error(GrossOpKind::CliffordRotation, a.p, a.cost);
        e_gmeas = e_zmeas;
        in_memory_cycles =
            std::llround(times.clifford_rotation * a.in_memory_clifford_multiplier);

        blocks.reserve(a.gross_blocks);
        for (uint32_t b = 0; b < a.gross_blocks; ++b)
            blocks.emplace_back(b, a.group, a.omega);
        tile_occupant.assign(a.surface_tiles, std::nullopt);
        for (uint32_t q = 0; q < c.width; ++q) {
            if (auto tile = placement.tile_of(q))
                tile_occupant[*tile] = q;
            else if (auto slot = placement.slot_of(q))
                blocks[slot->block].place(q, slot->label);
        }
        tile_free.assign(a.surface_tiles, 0);
        block_free.assign(a.gross_blocks, 0);
        qubit_ready.assign(c.width, 0);
        qubit_busy.assign(c.width, 0);

        std::vector<std::vector<uint32_t>> supports;
        supports.reserve(c.ops.size());
        for (const auto& op : c.ops)
            supports.push_back(op.pauli.qubits());
        OpDag dag = build_dag(supports);
        succ = dag.successors();
        indeg = dag.in_degrees();
        done.assign(c.ops.size(), false);
        for (size_t i = 0; i < c.ops.size(); ++i)
            if (indeg[i] == 0)
                frontier.insert(i);
        uses.resize(c.width);
        for (size_t i = 0; i < c.ops.size(); ++i)
            for (uint32_t q : supports[i])
                uses[q].push_back(i);
        use_cursor.assign(c.width, 0);
        remaining = c.ops.size();
    }

    size_t next_use(uint32_t q)
    {
        auto& cur = use_cursor[q];
        while (cur < uses[q].size() && done[uses[q][cur]])
            ++cur;
        return cur < uses[q].size() ? uses[q][cur] : kNone;
    }

    // How the op would run with the current placement, if it can.
    enum class ExecMode { No, Surface, InMemory, GrossMeasure };

    ExecMode exec_mode(size_t idx) const
    {
        const PbcOp& op = circuit.ops[idx];
        auto qs = op.pauli.qubits();
        bool all_surface = std::all_of(qs.begin(), qs.end(),
                                       [&](uint32_t q) { return placement.on_surface(q); });
        if (all_surface)
            return ExecMode::Surface;
        if (op.is_clifford_rotation()) {
            auto first = placement.slot_of(qs.front());
            bool one_block = first && std::all_of(qs.begin(), qs.end(), [&](uint32_t q) {
                                 auto s = placement.slot_of(q);
                                 return s && s->block == first->block;
                             });
            if (one_block)
                return ExecMode::InMemory;
        }
        if (op.is_measurement() && qs.size() == 1 && !placement.on_surface(qs.front()))
            return ExecMode::GrossMeasure;
        return ExecMode::No;
    }

    void emit(ScheduleEvent ev, const std::vector<int64_t*>& resources)
    {
        int64_t start = 0;
        for (int64_t* r : resources)
            start = std::max(start, *r);
        for (uint32_t q : ev.qubits)
            start = std::max(start, qubit_ready[q]);
        ev.start_cycle = start;
        int64_t end = start + ev.duration_cycles;
        for (int64_t* r : resources)
            *r = end;
        for (uint32_t q : ev.qubits) {
            qubit_ready[q] = end;
            qubit_busy[q] += ev.duration_cycles;
        }
        out.total_cycles = std::max(out.total_cycles, end);
        if (ev.kind == EventKind::Fetch || ev.kind == EventKind::Store)
            ++out.io_count;
        out.events.push_back(std::move(ev));
    }

    void complete(size_t idx)
    {
        done[idx] = true;
        frontier.erase(idx);
        --remaining;
        for (size_t s : succ[idx])
            if (--indeg[s] == 0)
                frontier.insert(s);
    }

    void execute(size_t idx, ExecMode mode)
    {
        const PbcOp& op = circuit.ops[idx];
        auto qs = op.pauli.qubits();
        size_t w = qs.size();
        ScheduleEvent ev;
        ev.qubits = qs;
        std::vector<int64_t*> resources;
        switch (mode) {
            case ExecMode::Surface: {
                for (uint32_t q : qs) {
                    uint32_t t = *placement.tile_of(q);
                    resources.push_back(&tile_free[t]);
                    ev.resources.push_back("tile" + std::to_string(t));
                }
                if (op.is_measurement()) {
                    ev.kind = EventKind::SurfaceMeasure;
                    ev.duration_cycles = arch.distance;
                    ev.error_contribution = static_cast<double>(w) * e_sc;
                    ev.category = ErrorCategory::Clifford;
                } else if (op.is_clifford_rotation()) {
                    ev.kind = EventKind::SurfaceClifford;
                    ev.duration_cycles = arch.distance;
                    ev.error_contribution = e_sc;
                    ev.category = ErrorCategory::Clifford;
                } else {
                    ev.kind = EventKind::SurfaceNonClifford;
                    ev.duration_cycles = 2 * static_cast<int64_t>(arch.distance);
                    ev.error_contribution = surface_nonclifford_error(
                        arch.p, arch.distance, w, arch.nonclifford_doubled, arch.cost);
                    ev.category = ErrorCategory::NonClifford;
                }
                break;
            }
            case ExecMode::InMemory: {
                uint32_t b = placement.slot_of(qs.front())->block;
                resources.push_back(&block_free[b]);
                ev.resources.push_back("block" + std::to_string(b));
                ev.kind = EventKind::InMemoryClifford;
                ev.duration_cycles = in_memory_cycles;
                ev.error_contribution = e_gclif;
                ev.category = ErrorCategory::Clifford;
                break;
            }
            case ExecMode::GrossMeasure: {
                uint32_t b = placement.slot_of(qs.front())->block;
                resources.push_back(&block_free[b]);
                resources.push_back(&bus_free);
                ev.resources = {"block" + std::to_string(b), "bus"};
                ev.kind = EventKind::GrossMeasure;
                ev.duration_cycles = times.z_measure;
                ev.error_contribution = e_gmeas;
                ev.category = ErrorCategory::IO;
                break;
            }
            case ExecMode::No: throw std::logic_error("execute on non-executable op");
        }
        emit(std::move(ev), resources);
        complete(idx);
    }

    // Runs every executable frontier op until none is left.
    void drain_executable()
    {
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<std::pair<size_t, ExecMode>> ready;
            for (size_t idx : frontier) {
                ExecMode m = exec_mode(idx);
                if (m != ExecMode::No)
                    ready.emplace_back(idx, m);
            }
            for (auto& [idx, m] : ready) {
                execute(idx, m);
                progress = true;
            }
        }
    }

    std::optional<uint32_t> free_tile() const
    {
        for (uint32_t t = 0; t < arch.surface_tiles; ++t)
            if (!tile_occupant[t])
                return t;
        return std::nullopt;
    }

    // Evict the surface-resident qubit with the farthest next use, skipping
    // operands of the op being unblocked.
    uint32_t pick_victim(const std::vector<uint32_t>& protected_qubits)
    {
        std::optional<uint32_t> best;
        size_t best_next = 0;
        for (uint32_t t = 0; t < arch.surface_tiles; ++t) {
            if (!tile_occupant[t])
                continue;
            uint32_t q = *tile_occupant[t];
            if (std::find(protected_qubits.begin(), protected_qubits.end(), q) !=
                protected_qubits.end())
                continue;
            size_t nu = next_use(q);
            if (!best || nu > best_next) {
                best = q;
                best_next = nu;
            }
        }
        if (!best)
            throw std::logic_error("scheduler deadlock: no evictable surface qubit");
        return *best;
    }

    uint32_t block_with_space()
    {
        for (uint32_t b = 0; b < blocks.size(); ++b)
            if (blocks[b].occupied_count() < arch.block_capacity && blocks[b].first_free_slot())
                return b;
        throw CapacityError("no gross block has a free slot");
    }

    void do_store(uint32_t q)
    {
        uint32_t tile = *placement.tile_of(q);
        uint32_t b = block_with_space();
        MonomialLabel slot = *blocks[b].first_free_slot();
        MoveRecord rec =
            blocks[b].store(q, slot, arch.sync_mode, times, e_auto, e_xx, e_zmeas);
        ScheduleEvent ev;
        ev.kind = EventKind::Store;
        ev.qubits = {q};
        ev.resources = {"bus", "block" + std::to_string(b), "tile" + std::to_string(tile)};
        ev.duration_cycles = rec.duration_cycles;
        ev.error_contribution = rec.error_contribution;
        ev.category = ErrorCategory::IO;
        emit(std::move(ev), {&bus_free, &block_free[b], &tile_free[tile]});
        tile_occupant[tile] = std::nullopt;
        placement.locations[q] = GrossSlot{b, slot};
    }

    void do_fetch(uint32_t q, const std::vector<uint32_t>& protected_qubits)
    {
        GrossSlot slot = *placement.slot_of(q);
        if (!free_tile())
            do_store(pick_victim(protected_qubits));
        uint32_t tile = *free_tile();
        MoveRecord rec = blocks[slot.block].fetch(slot.label, arch.sync_mode, times, e_auto,
                                                  e_xx, e_zmeas);
        ScheduleEvent ev;
        ev.kind = EventKind::Fetch;
        ev.qubits = {q};
        ev.resources = {"bus", "block" + std::to_string(slot.block),
                        "tile" + std::to_string(tile)};
        ev.duration_cycles = rec.duration_cycles;
        ev.error_contribution = rec.error_contribution;
        ev.category = ErrorCategory::IO;
        emit(std::move(ev), {&bus_free, &block_free[slot.block], &tile_free[tile]});
        tile_occupant[tile] = q;
        placement.locations[q] = SurfaceTile{tile};
    }

    // One blocked step: pick the single fetch unblocking the most frontier ops.
    void resolve_blocked()
    {
        struct Candidate {
            uint32_t qubit;
            size_t op; // the op it serves (for eviction protection)
        };
        std::vector<Candidate> candidates;
        std::set<uint32_t> seen;
        for (size_t idx : frontier) {
            for (uint32_t q : circuit.ops[idx].pauli.qubits()) {
                if (!placement.on_surface(q) && seen.insert(q).second)
                    candidates.push_back({q, idx});
            }
        }
        if (candidates.empty())
            throw std::logic_error("scheduler deadlock: blocked frontier with no memory operand");

        auto score = [&](uint32_t moved) {
            size_t unblocked = 0;
            for (size_t idx : frontier) {
                bool ok = true;
                for (uint32_t q : circuit.ops[idx].pauli.qubits())
                    if (!placement.on_surface(q) && q != moved)
                        ok = false;
                if (ok)
                    ++unblocked;
            }
            return unblocked;
        };

        std::shuffle(candidates.begin(), candidates.end(), rng);
        size_t best = 0;
        size_t best_score = 0;
        bool have = false;
        for (size_t i = 0; i < candidates.size(); ++i) {
            size_t s = score(candidates[i].qubit);
            if (!have || s > best_score) {
                best = i;
                best_score = s;
                have = true;
            }
        }
        const Candidate& chosen = candidates[best];
        do_fetch(chosen.qubit, circuit.ops[chosen.op].pauli.qubits());
    }

    void accrue_idle()
    {
        if (arch.idle_error_per_cycle <= 0)
            return;
        double idle_error = 0;
        for (uint32_t q = 0; q < circuit.width; ++q)
            idle_error +=
                arch.idle_error_per_cycle * static_cast<double>(out.total_cycles - qubit_busy[q]);
        ScheduleEvent ev;
        ev.kind = EventKind::Idle;
        ev.start_cycle = 0;
        ev.duration_cycles = 0;
        ev.error_contribution = idle_error;
        ev.category = ErrorCategory::Clifford;
        out.events.push_back(std::move(ev));
    }

    Schedule run()
    {
        while (remaining > 0) {
            drain_executable();
            if (remaining == 0)
                break;
            resolve_blocked();
        }
        accrue_idle();
        std::stable_sort(out.events.begin(), out.events.end(),
                         [](const ScheduleEvent& a, const ScheduleEvent& b) {
                             return a.start_cycle < b.start_cycle;
                         });
        for (const auto& ev : out.events) {
            switch (ev.category) {
                case ErrorCategory::IO: out.error_io += ev.error_contribution; break;
                case ErrorCategory::Clifford: out.error_clifford += ev.error_contribution; break;
                case ErrorCategory::NonClifford:
                    out.error_nonclifford += ev.error_contribution;
                    break;
            }
        }
        out.final_placement = placement;
        return std::move(out);
    }
};

} // namespace

Schedule schedule(const PbcCircuit& circuit, const ArchitectureConfig& arch, uint64_t seed)
{
    arch.check();
    for (const auto& op : circuit.ops) {
        if (!op.is_clifford_rotation() && op_weight(op) > arch.surface_tiles)
            throw std::logic_error("op weight " + std::to_string(op_weight(op)) +
                                   " exceeds surface capacity (circuit not pruned with W <= S?)");
    }
    SchedulerState state(circuit, arch, seed);
    return state.run();
}

ScheduleStats schedule_stats(const Schedule& s)
{
    ScheduleStats stats;
    for (const auto& ev : s.events)
        ++stats.kind_counts[ev.kind];
    stats.io_count = s.io_count;
    stats.cycles = s.total_cycles;
    stats.error_io = s.error_io;
    stats.error_clifford = s.error_clifford;
    stats.error_nonclifford = s.error_nonclifford;
    stats.event_count = s.events.size();
    return stats;
}

std::string schedule_to_json(const Schedule& s)
{
    nlohmann::json events = nlohmann::json::array();
    for (const auto& ev : s.events) {
        events.push_back({{"kind", event_kind_name(ev.kind)},
                          {"qubits", ev.qubits},
                          {"resources", ev.resources},
                          {"start", ev.start_cycle},
                          {"duration", ev.duration_cycles},
                          {"error", ev.error_contribution}});
    }
    nlohmann::json j{{"total_cycles", s.total_cycles},
                     {"io_count", s.io_count},
                     {"error_io", s.error_io},
                     {"error_clifford", s.error_clifford},
                     {"error_nonclifford", s.error_nonclifford},
                     {"events", std::move(events)}};
    return j.dump(2) + "\n";
}

std::string schedule_to_csv(const Schedule& s)
{
    std::ostringstream os;
    os << "kind,qubits,start,duration,error\n";
    for (const auto& ev : s.events) {
        os << event_kind_name(ev.kind) << ',';
        for (size_t i = 0; i < ev.qubits.size(); ++i)
            os << (i ? " " : "") << ev.qubits[i];
        os << ',' << ev.start_cycle << ',' << ev.duration_cycles << ',' << ev.error_contribution
           << '\n';
    }
    return os.str();
}

} // namespace hetec
