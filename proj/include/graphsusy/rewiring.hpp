#pragma once

// Smooth rewirings: one endpoint of one edge moves at a time, keeping the
// graph simple and |V|, |E| fixed. Reassigning an edge's tail to its own head
// would be a loop; that slot instead denotes the orientation flip of the
// edge, which is enumerated but flagged as orientation-only.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "graphsusy/graph.hpp"
#include "graphsusy/susy.hpp"

namespace graphsusy {

enum class Endpoint { Tail, Head };

constexpr std::string_view to_string(Endpoint e) noexcept { return e == Endpoint::Tail ? "tail" : "head"; }

struct RewiringMove {
    std::size_t edge = 0;
    Endpoint endpoint = Endpoint::Tail;
    std::size_t vertex = 0; // new endpoint
    bool orientation_only = false;
    friend bool operator==(const RewiringMove&, const RewiringMove&) = default;
};

inline RewiringMove flip_move(const OrientedGraph& g, std::size_t e)
{
    return {e, Endpoint::Tail, g.edge(e).head, true};
}

/// Legal moves ordered by (edge, endpoint, target vertex). Orientation
/// flips occupy the (e, tail, head(e)) slot.
inline std::vector<RewiringMove> enumerate_moves(const OrientedGraph& g)
{
    std::vector<RewiringMove> moves;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        for (Endpoint ep : {Endpoint::Tail, Endpoint::Head}) {
            const std::size_t current = ep == Endpoint::Tail ? ed.tail : ed.head;
            const std::size_t fixed = ep == Endpoint::Tail ? ed.head : ed.tail;
            for (std::size_t w = 0; w < g.vertex_count(); ++w) {
                if (w == current)
                    continue;
                if (w == fixed) {
                    if (ep == Endpoint::Tail)
                        moves.push_back(flip_move(g, e));
                    continue;
                }
                if (g.edge_between(fixed, w))
                    continue;
                moves.push_back({e, ep, w, false});
            }
        }
    }
    return moves;
}

inline std::size_t structural_move_count(const std::vector<RewiringMove>& moves)
{
    return static_cast<std::size_t>(
        std::count_if(moves.begin(), moves.end(), [](const RewiringMove& m) { return !m.orientation_only; }));
}

inline OrientedGraph apply_move(const OrientedGraph& g, const RewiringMove& m)
{
    if (m.edge >= g.edge_count() || m.vertex >= g.vertex_count())
        throw Error(ErrorCode::IllegalMove, "move references a missing edge or vertex");
    Edge ed = g.edge(m.edge);
    const std::size_t current = m.endpoint == Endpoint::Tail ? ed.tail : ed.head;
    const std::size_t fixed = m.endpoint == Endpoint::Tail ? ed.head : ed.tail;
    if (m.orientation_only) {
        if (m.vertex != fixed)
            throw Error(ErrorCode::IllegalMove, "orientation flip must target the opposite endpoint", ed.id);
        std::swap(ed.tail, ed.head);
        return g.with_edge(m.edge, ed);
    }
    if (m.vertex == current)
        throw Error(ErrorCode::IllegalMove, "move leaves edge '" + ed.id + "' unchanged", ed.id);
    if (m.vertex == fixed)
        throw Error(ErrorCode::IllegalMove, "move would make edge '" + ed.id + "' a self-loop", ed.id);
    if (g.edge_between(fixed, m.vertex))
        throw Error(ErrorCode::IllegalMove, "move would make edge '" + ed.id + "' parallel to another", ed.id);
    (m.endpoint == Endpoint::Tail ? ed.tail : ed.head) = m.vertex;
    return g.with_edge(m.edge, ed);
}

struct ComponentCycleDelta {
    long long components = 0;
    long long cycles = 0;
};

inline ComponentCycleDelta component_cycle_delta(const OrientedGraph& g, const RewiringMove& m)
{
    const auto after = apply_move(g, m);
    return {static_cast<long long>(component_count(after)) - static_cast<long long>(component_count(g)),
            static_cast<long long>(cycle_rank(after)) - static_cast<long long>(cycle_rank(g))};
}

struct MoveCheck {
    RewiringMove move;
    long long witten = 0;
    ComponentCycleDelta delta;
};

struct WittenInvarianceReport {
    long long witten = 0;
    std::vector<MoveCheck> moves;
    bool invariant = true;     // W unchanged by every move
    bool deltas_match = true;  // Δcomponents = Δcycles for every move
};

/// Recomputes W (all routes) after every legal move.
inline WittenInvarianceReport verify_witten_invariance(const OrientedGraph& g)
{
    WittenInvarianceReport r;
    r.witten = witten_index(g).value;
    const std::size_t cc = component_count(g);
    const std::size_t cr = cycle_rank(g);
    for (const auto& m : enumerate_moves(g)) {
        const auto after = apply_move(g, m);
        MoveCheck c{m, witten_index(after).value,
                    {static_cast<long long>(component_count(after)) - static_cast<long long>(cc),
                     static_cast<long long>(cycle_rank(after)) - static_cast<long long>(cr)}};
        r.invariant = r.invariant && c.witten == r.witten;
        r.deltas_match = r.deltas_match && c.delta.components == c.delta.cycles;
        r.moves.push_back(c);
    }
    return r;
}

struct MinimizationResult {
    std::vector<RewiringMove> moves;
    std::vector<OrientedGraph> graphs; // graphs[0] is the input, graphs[k+1] after moves[k]
    VacuumReport final_vacuum;
};

/// Greedy cycle removal: while some component holds a cycle and another
/// component exists, move the head of the lowest-index cycle edge of the
/// lowest such component onto the first vertex of the lowest-index other
/// component (preferring acyclic targets). Each step lowers both the
/// component count and the cycle rank by one.
inline MinimizationResult minimize_cycles(const OrientedGraph& g)
{
    MinimizationResult out;
    out.graphs.push_back(g);
    OrientedGraph cur = g;
    for (;;) {
        const auto label = component_labels(cur);
        const auto parts = connected_components(cur);
        if (parts.size() < 2)
            break;
        std::vector<std::size_t> edges_in(parts.size(), 0);
        for (const auto& e : cur.edges())
            ++edges_in[label[e.tail]];
        std::vector<bool> cyclic(parts.size());
        for (std::size_t c = 0; c < parts.size(); ++c)
            cyclic[c] = edges_in[c] >= parts[c].size();

        const auto src = std::find(cyclic.begin(), cyclic.end(), true);
        if (src == cyclic.end())
            break;
        const std::size_t source = static_cast<std::size_t>(src - cyclic.begin());

        std::size_t target = parts.size();
        for (std::size_t c = 0; c < parts.size() && target == parts.size(); ++c)
            if (c != source && !cyclic[c])
                target = c;
        for (std::size_t c = 0; c < parts.size() && target == parts.size(); ++c)
            if (c != source)
                target = c;

        const auto br = bridge_indices(cur);
        std::size_t edge = cur.edge_count();
        for (std::size_t e = 0; e < cur.edge_count() && edge == cur.edge_count(); ++e)
            if (label[cur.edge(e).tail] == source && !std::binary_search(br.begin(), br.end(), e))
                edge = e;

        const RewiringMove m{edge, Endpoint::Head, parts[target].front(), false};
        cur = apply_move(cur, m);
        out.moves.push_back(m);
        out.graphs.push_back(cur);
    }
    out.final_vacuum = vacuum_classification(cur);
    return out;
}

// ---------------------------------------------------------------------------
// Optional isomorphism quotient (unoriented, labels ignored)

inline constexpr std::size_t isomorphism_vertex_cap = 8;

/// Lexicographically smallest upper-triangle adjacency bit string over all
/// vertex relabellings.
inline std::vector<bool> canonical_form(const OrientedGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > isomorphism_vertex_cap)
        throw Error(ErrorCode::TooLarge, "isomorphism search is capped at 8 vertices");
    const auto adj = adjacency_matrix(g);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        code.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                code.push_back(adj(perm[i], perm[j]) != 0);
        if (best.empty() || code < best)
            best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Keeps the first move (in enumeration order) of each isomorphism class of
/// resulting graphs. Orientation flips never change the class of the input
/// and are kept as they are.
inline std::vector<RewiringMove> deduplicate_isomorphic(const OrientedGraph& g, const std::vector<RewiringMove>& moves)
{
    std::set<std::vector<bool>> seen;
    std::vector<RewiringMove> out;
    for (const auto& m : moves) {
        if (m.orientation_only) {
            out.push_back(m);
            continue;
        }
        if (seen.insert(canonical_form(apply_move(g, m))).second)
            out.push_back(m);
    }
    return out;
}

} // namespace graphsusy
