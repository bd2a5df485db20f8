#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphsusy/graph.hpp"

namespace graphsusy {

using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

inline OrientedGraph null_graph() { return OrientedGraph("null", {}, {}); }

inline OrientedGraph empty_graph(std::size_t n)
{
    return OrientedGraph::from_pairs(n, {}, "E" + std::to_string(n));
}

/// v1 -> v2 -> ... -> vn.
inline OrientedGraph path_graph(std::size_t n)
{
    IndexPairs p;
    for (std::size_t i = 0; i + 1 < n; ++i)
        p.emplace_back(i, i + 1);
    return OrientedGraph::from_pairs(n, p, "P" + std::to_string(n));
}

/// Cyclically oriented: e_k = v_k -> v_{k+1}, e_n = v_n -> v_1.
inline OrientedGraph cycle_graph(std::size_t n)
{
    IndexPairs p;
    for (std::size_t i = 0; i < n; ++i)
        p.emplace_back(i, (i + 1) % n);
    return OrientedGraph::from_pairs(n, p, "C" + std::to_string(n));
}

/// Edges oriented from lower to higher index.
inline OrientedGraph complete_graph(std::size_t n)
{
    IndexPairs p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            p.emplace_back(i, j);
    return OrientedGraph::from_pairs(n, p, "K" + std::to_string(n));
}

/// Centre v1 joined to `leaves` outer vertices.
inline OrientedGraph star_graph(std::size_t leaves)
{
    IndexPairs p;
    for (std::size_t i = 1; i <= leaves; ++i)
        p.emplace_back(0, i);
    return OrientedGraph::from_pairs(leaves + 1, p, "K1," + std::to_string(leaves));
}

/// Vertices and edges of b follow those of a; ids are renumbered v1.., e1...
inline OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b)
{
    IndexPairs p;
    for (const auto& e : a.edges())
        p.emplace_back(e.tail, e.head);
    for (const auto& e : b.edges())
        p.emplace_back(a.vertex_count() + e.tail, a.vertex_count() + e.head);
    return OrientedGraph::from_pairs(a.vertex_count() + b.vertex_count(), p, a.name() + "+" + b.name());
}

template <typename Rng>
OrientedGraph random_orientation(const OrientedGraph& g, Rng& rng)
{
    std::bernoulli_distribution flip(0.5);
    auto edges = g.edges();
    for (auto& e : edges)
        if (flip(rng))
            std::swap(e.tail, e.head);
    return OrientedGraph(g.name(), g.vertices(), std::move(edges));
}

/// G(n, p) with independently random orientations.
template <typename Rng>
OrientedGraph random_graph(Rng& rng, std::size_t n, double density)
{
    std::bernoulli_distribution keep(density);
    std::bernoulli_distribution flip(0.5);
    IndexPairs p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (keep(rng))
                p.push_back(flip(rng) ? std::make_pair(j, i) : std::make_pair(i, j));
    return OrientedGraph::from_pairs(n, p, "G(" + std::to_string(n) + "," + std::to_string(density) + ")");
}

/// `count` random graphs with vertex counts in [min_vertices, max_vertices]
/// and edge densities drawn uniformly from [0.05, 0.95].
inline std::vector<OrientedGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t min_vertices,
                                                std::size_t max_vertices)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(min_vertices, max_vertices);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    std::vector<OrientedGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = size(rng);
        out.push_back(random_graph(rng, n, density(rng)));
    }
    return out;
}

/// Every labelled connected simple graph on n vertices with at most
/// max_edges edges, each with a random orientation.
template <typename Rng>
std::vector<OrientedGraph> connected_graphs(std::size_t n, std::size_t max_edges, Rng& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);
    std::vector<OrientedGraph> out;
    std::bernoulli_distribution flip(0.5);
    const std::size_t total = std::size_t{1} << slots.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_edges)
            continue;
        IndexPairs p;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1u)
                p.push_back(flip(rng) ? std::make_pair(slots[s].second, slots[s].first) : slots[s]);
        auto g = OrientedGraph::from_pairs(n, p);
        if (n == 1 || is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rewiring scenarios

/// Triangle v1 v2 v3 (e3 = v1 v3) with an isolated vertex v4. W = 1.
/// Moving e3's v1 end to v4 leaves the path v1 v2 v3 v4.
inline OrientedGraph triangle_with_isolated_vertex()
{
    return OrientedGraph::from_pairs(4, {{0, 1}, {1, 2}, {0, 2}}, "triangle_pendant");
}

/// Triangle v1 v2 v3 with pendant edge e3 = v3 -> v4 (its only bridge).
inline OrientedGraph triangle_with_pendant_edge()
{
    return OrientedGraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {2, 0}}, "paw");
}

/// Square v1 v2 v3 v4 with bottleneck e3 = v3 -> v5. Moving the v5 end of
/// e3 to v1 cuts v5 off and closes a second cycle.
inline OrientedGraph bottleneck_graph()
{
    return OrientedGraph::from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {2, 3}, {3, 0}}, "bottleneck");
}

/// Two cyclically oriented triangles, e1..e3 on v1..v3 and e4..e6 on v4..v6.
inline OrientedGraph disjoint_triangles()
{
    return OrientedGraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, "disjoint_triangles");
}

} // namespace graphsusy
