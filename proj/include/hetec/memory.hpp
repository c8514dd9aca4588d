#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetec {

// Abelian label group Z_l x Z_m for the gross block's logical slots.
struct GroupSpec {
    uint32_t l = 6;
    uint32_t m = 2;

    uint32_t order() const { return l * m; }
    bool operator==(const GroupSpec&) const = default;
};

// Monomial x^i y^j; multiplication is componentwise addition mod (l, m).
struct MonomialLabel {
    uint32_t i = 0;
    uint32_t j = 0;

    bool operator==(const MonomialLabel&) const = default;
    auto operator<=>(const MonomialLabel&) const = default;

    std::string str() const;
};

MonomialLabel mul(MonomialLabel a, MonomialLabel b, GroupSpec g);
MonomialLabel inverse(MonomialLabel a, GroupSpec g);
// a^{-1} * b: the automorphism word needed to move a to b.
MonomialLabel differential(MonomialLabel from, MonomialLabel to, GroupSpec g);

// Index <-> label enumeration in row-major (i, j) order.
MonomialLabel label_of_index(uint32_t idx, GroupSpec g);
uint32_t index_of_label(MonomialLabel m, GroupSpec g);

enum class RouteBasis : uint8_t { X, Z, Both };

struct GeneratorSet {
    struct Generator {
        MonomialLabel label;
        RouteBasis basis = RouteBasis::Both;
    };

    std::vector<Generator> generators;

    // The notes' operator set {x, x^2, x^4, x^5, xy}; generates Z_6 x Z_2
    // with mean access cost 1.5 and eccentricity 3.
    static GeneratorSet default_set();

    std::vector<MonomialLabel> labels_for(RouteBasis basis) const;
    bool generates(GroupSpec g, RouteBasis basis) const;
};

// Minimum-length generator word taking `from` to `to` (BFS over the Cayley
// graph; ties broken by generator enumeration order). Throws if the set does
// not generate the group.
std::vector<MonomialLabel> shortest_automorphism_sequence(MonomialLabel from, MonomialLabel to,
                                                          const GeneratorSet& omega, GroupSpec g,
                                                          RouteBasis basis = RouteBasis::X);

struct AccessCostStats {
    double mean = 0;
    size_t max = 0;
    std::vector<size_t> histogram; // histogram[k] = ordered pairs at distance k
};

// Exhaustive BFS statistics over all ordered (probe, target) pairs.
AccessCostStats access_cost_stats(const GeneratorSet& omega, GroupSpec g,
                                  RouteBasis basis = RouteBasis::X);

// Per-operation gross-code durations in logical clock cycles.
struct GrossTimes {
    int64_t automorphism = 1;
    int64_t joint_xx = 7;
    int64_t z_measure = 7;
    int64_t clifford_rotation = 14;

    bool operator==(const GrossTimes&) const = default;
};

struct MoveRecord {
    enum class Direction : uint8_t { Fetch, Store };

    Direction direction = Direction::Fetch;
    size_t x_auto_steps = 0;
    size_t z_auto_steps = 0;
    bool joint_xx = true;
    bool z_measurement = true;
    bool pauli_fix = true; // classical correction marker
    int64_t duration_cycles = 0;
    double error_contribution = 0;
};

int64_t move_duration(size_t x_steps, size_t z_steps, const GrossTimes& t);

struct BusBusyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SlotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One gross-code memory block: monomial-labeled logical slots, a probe slot
// adjacent to the bus port, and fetch/store teleportation. Mutable state
// machine; callers serialize operations per block.
class GrossBlock {
public:
    GrossBlock(uint32_t id, GroupSpec group = GroupSpec{}, GeneratorSet omega = GeneratorSet::default_set());

    uint32_t id() const { return id_; }
    GroupSpec group() const { return group_; }
    // One slot is sacrificed for in-block Clifford support.
    uint32_t capacity() const { return group_.order() - 1; }
    MonomialLabel probe() const { return probe_; }

    size_t occupied_count() const;
    std::optional<uint32_t> occupant(MonomialLabel slot) const;
    std::optional<MonomialLabel> slot_of(uint32_t qubit) const;
    std::optional<MonomialLabel> first_free_slot() const;
    const std::vector<MonomialLabel>& usable_slots() const { return usable_; }

    void place(uint32_t qubit, MonomialLabel slot); // initial placement only

    // Overrides the default Z-operator labeling (Z label == X label). Keys
    // must cover all usable slots.
    void set_z_labels(std::map<MonomialLabel, MonomialLabel> z_labels);

    // Teleports the occupant of `target_label` out of the block (to the bus
    // side). error rates: per-automorphism, per joint-XX, per Z-measurement.
    MoveRecord fetch(MonomialLabel target_label, bool sync_mode, const GrossTimes& times,
                     double e_auto, double e_xx, double e_zmeas);

    // Teleports `qubit` into empty slot `target_label`.
    MoveRecord store(uint32_t qubit, MonomialLabel target_label, bool sync_mode,
                     const GrossTimes& times, double e_auto, double e_xx, double e_zmeas);

private:
    MoveRecord move(MoveRecord::Direction dir, MonomialLabel target_label, bool sync_mode,
                    const GrossTimes& times, double e_auto, double e_xx, double e_zmeas);
    MonomialLabel z_label(MonomialLabel slot) const;

    uint32_t id_;
    GroupSpec group_;
    GeneratorSet omega_;
    MonomialLabel probe_{};
    std::vector<MonomialLabel> usable_;
    std::map<MonomialLabel, std::optional<uint32_t>> occupancy_;
    std::map<MonomialLabel, MonomialLabel> z_labels_; // empty: identity map
};

} // namespace hetec
