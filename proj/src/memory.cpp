#include "hetec/memory.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hetec {

std::string MonomialLabel::str() const
{
    if (i == 0 && j == 0)
        return "1";
    std::string s;
    if (i == 1)
        s += "x";
    else if (i > 1)
        s += "x^" + std::to_string(i);
    if (j == 1)
        s += "y";
    else if (j > 1)
        s += "y^" + std::to_string(j);
    return s;
}

MonomialLabel mul(MonomialLabel a, MonomialLabel b, GroupSpec g)
{
    return {(a.i + b.i) % g.l, (a.j + b.j) % g.m};
}

MonomialLabel inverse(MonomialLabel a, GroupSpec g)
{
    return {(g.l - a.i) % g.l, (g.m - a.j) % g.m};
}

MonomialLabel differential(MonomialLabel from, MonomialLabel to, GroupSpec g)
{
    return mul(inverse(from, g), to, g);
}

MonomialLabel label_of_index(uint32_t idx, GroupSpec g)
{
    return {idx / g.m, idx % g.m};
}

uint32_t index_of_label(MonomialLabel m, GroupSpec g)
{
    return m.i * g.m + m.j;
}

GeneratorSet GeneratorSet::default_set()
{
    GeneratorSet s;
    s.generators = {
        {{1, 0}, RouteBasis::Both}, // x
        {{2, 0}, RouteBasis::Both}, // x^2
        {{4, 0}, RouteBasis::Both}, // x^4
        {{5, 0}, RouteBasis::Both}, // x^5
        {{1, 1}, RouteBasis::Both}, // xy
    };
    return s;
}

std::vector<MonomialLabel> GeneratorSet::labels_for(RouteBasis basis) const
{
    std::vector<MonomialLabel> out;
    for (const auto& gen : generators)
        if (gen.basis == RouteBasis::Both || gen.basis == basis || basis == RouteBasis::Both)
            out.push_back(gen.label);
    return out;
}

namespace {

// BFS distances and first-hop predecessors from the identity.
struct CayleyBfs {
    std::vector<int> dist;
    std::vector<int> via_gen;   // generator index used to reach node
    std::vector<uint32_t> prev; // previous node on a shortest path
};

CayleyBfs bfs_from_identity(const std::vector<MonomialLabel>& gens, GroupSpec g)
{
    CayleyBfs b;
    uint32_t n = g.order();
    b.dist.assign(n, -1);
    b.via_gen.assign(n, -1);
    b.prev.assign(n, 0);
    std::deque<uint32_t> queue;
    b.dist[0] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        MonomialLabel lu = label_of_index(u, g);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            uint32_t v = index_of_label(mul(lu, gens[gi], g), g);
            if (b.dist[v] < 0) {
                b.dist[v] = b.dist[u] + 1;
                b.via_gen[v] = static_cast<int>(gi);
                b.prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    return b;
}

} // namespace

bool GeneratorSet::generates(GroupSpec g, RouteBasis basis) const
{
    auto gens = labels_for(basis);
    if (gens.empty())
        return false;
    auto b = bfs_from_identity(gens, g);
    return std::all_of(b.dist.begin(), b.dist.end(), [](int d) { return d >= 0; });
}

std::vector<MonomialLabel> shortest_automorphism_sequence(MonomialLabel from, MonomialLabel to,
                                                          const GeneratorSet& omega, GroupSpec g,
                                                          RouteBasis basis)
{
    auto gens = omega.labels_for(basis);
    auto b = bfs_from_identity(gens, g);
    // Translation invariance: the word for from->to equals the word for
    // identity -> from^{-1} * to.
    uint32_t target = index_of_label(differential(from, to, g), g);
    if (b.dist[target] < 0)
        throw std::invalid_argument("generator set does not generate the label group");
    std::vector<MonomialLabel> word;
    for (uint32_t v = target; v != 0; v = b.prev[v])
        word.push_back(gens[static_cast<size_t>(b.via_gen[v])]);
    std::reverse(word.begin(), word.end());
    return word;
}

AccessCostStats access_cost_stats(const GeneratorSet& omega, GroupSpec g, RouteBasis basis)
{
    auto gens = omega.labels_for(basis);
    auto b = bfs_from_identity(gens, g);
    AccessCostStats stats;
    uint32_t n = g.order();
    size_t total = 0;
    for (uint32_t d_idx = 0; d_idx < n; ++d_idx) {
        if (b.dist[d_idx] < 0)
            throw std::invalid_argument("generator set does not generate the label group");
        size_t d = static_cast<size_t>(b.dist[d_idx]);
        if (stats.histogram.size() <= d)
            stats.histogram.resize(d + 1, 0);
        stats.histogram[d] += n; // each differential occurs for n ordered pairs
        stats.max = std::max(stats.max, d);
        total += d * n;
    }
    stats.mean = static_cast<double>(total) / (static_cast<double>(n) * n);
    return stats;
}

int64_t move_duration(size_t x_steps, size_t z_steps, const GrossTimes& t)
{
    return static_cast<int64_t>(x_steps) * t.automorphism +
           static_cast<int64_t>(z_steps) * t.automorphism + t.joint_xx + t.z_measure;
}

GrossBlock::GrossBlock(uint32_t id, GroupSpec group, GeneratorSet omega)
    : id_(id), group_(group), omega_(std::move(omega))
{
    if (!omega_.generates(group_, RouteBasis::X) || !omega_.generates(group_, RouteBasis::Z))
        throw std::invalid_argument("generator set does not generate the label group");
    // The last label in enumeration order is sacrificed for Clifford support.
    for (uint32_t idx = 0; idx + 1 < group_.order(); ++idx) {
        MonomialLabel lab = label_of_index(idx, group_);
        usable_.push_back(lab);
        occupancy_[lab] = std::nullopt;
    }
}

size_t GrossBlock::occupied_count() const
{
    size_t n = 0;
    for (const auto& [slot, occ] : occupancy_)
        if (occ)
            ++n;
    return n;
}

std::optional<uint32_t> GrossBlock::occupant(MonomialLabel slot) const
{
    auto it = occupancy_.find(slot);
    return it == occupancy_.end() ? std::nullopt : it->second;
}

std::optional<MonomialLabel> GrossBlock::slot_of(uint32_t qubit) const
{
    for (const auto& [slot, occ] : occupancy_)
        if (occ && *occ == qubit)
            return slot;
    return std::nullopt;
}

std::optional<MonomialLabel> GrossBlock::first_free_slot() const
{
    for (MonomialLabel slot : usable_)
        if (!occupancy_.at(slot))
            return slot;
    return std::nullopt;
}

void GrossBlock::place(uint32_t qubit, MonomialLabel slot)
{
    auto it = occupancy_.find(slot);
    if (it == occupancy_.end())
        throw SlotError("slot " + slot.str() + " is not usable");
    if (it->second)
        throw SlotError("slot " + slot.str() + " already occupied");
    it->second = qubit;
}

void GrossBlock::set_z_labels(std::map<MonomialLabel, MonomialLabel> z_labels)
{
    for (MonomialLabel slot : usable_)
        if (!z_labels.count(slot))
            throw SlotError("z label map missing slot " + slot.str());
    z_labels_ = std::move(z_labels);
}

MonomialLabel GrossBlock::z_label(MonomialLabel slot) const
{
    if (z_labels_.empty())
        return slot;
    return z_labels_.at(slot);
}

MoveRecord GrossBlock::move(MoveRecord::Direction dir, MonomialLabel target_label, bool sync_mode,
                            const GrossTimes& times, double e_auto, double e_xx, double e_zmeas)
{
    MoveRecord rec;
    rec.direction = dir;

    auto x_word = shortest_automorphism_sequence(probe_, target_label, omega_, group_, RouteBasis::X);
    rec.x_auto_steps = x_word.size();

    if (sync_mode) {
        // X and Z operators shift with the same monomial: m_d' is the identity.
        rec.z_auto_steps = 0;
    } else {
        MonomialLabel m_d = differential(probe_, target_label, group_);
        MonomialLabel z_diff = differential(z_label(probe_), z_label(target_label), group_);
        MonomialLabel m_d_prime = mul(z_diff, inverse(m_d, group_), group_);
        auto z_word = shortest_automorphism_sequence(MonomialLabel{}, m_d_prime, omega_, group_,
                                                     RouteBasis::Z);
        rec.z_auto_steps = z_word.size();
    }

    rec.duration_cycles = move_duration(rec.x_auto_steps, rec.z_auto_steps, times);
    rec.error_contribution =
        static_cast<double>(rec.x_auto_steps + rec.z_auto_steps) * e_auto + e_xx + e_zmeas;
    probe_ = target_label;
    return rec;
}

MoveRecord GrossBlock::fetch(MonomialLabel target_label, bool sync_mode, const GrossTimes& times,
                             double e_auto, double e_xx, double e_zmeas)
{
    auto it = occupancy_.find(target_label);
    if (it == occupancy_.end())
        throw SlotError("fetch: slot " + target_label.str() + " is not usable");
    if (!it->second)
        throw SlotError("fetch: slot " + target_label.str() + " is empty");
    MoveRecord rec =
        move(MoveRecord::Direction::Fetch, target_label, sync_mode, times, e_auto, e_xx, e_zmeas);
    it->second = std::nullopt;
    return rec;
}

MoveRecord GrossBlock::store(uint32_t qubit, MonomialLabel target_label, bool sync_mode,
                             const GrossTimes& times, double e_auto, double e_xx, double e_zmeas)
{
    auto it = occupancy_.find(target_label);
    if (it == occupancy_.end())
        throw SlotError("store: slot " + target_label.str() + " is not usable");
    if (it->second)
        throw SlotError("store: slot " + target_label.str() + " is occupied");
    MoveRecord rec =
        move(MoveRecord::Direction::Store, target_label, sync_mode, times, e_auto, e_xx, e_zmeas);
    it->second = qubit;
    return rec;
}

} // namespace hetec
