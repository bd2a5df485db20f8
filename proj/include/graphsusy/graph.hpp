#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graphsusy/error.hpp"
#include "graphsusy/matrix.hpp"

namespace graphsusy {

struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;

    std::size_t other(std::size_t v) const noexcept { return v == tail ? head : tail; }
    bool touches(std::size_t v) const noexcept { return v == tail || v == head; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple graph with an ordered vertex list and oriented edges.
/// Vertex order fixes matrix row order, edge order fixes column order.
/// Construction validates simplicity; an instance is always a simple graph.
class OrientedGraph {
public:
    OrientedGraph() = default;

    OrientedGraph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges)
        : name_(std::move(name))
        , vertices_(std::move(vertices))
        , edges_(std::move(edges))
    {
        validate();
        build_incidence();
    }

    /// Graph on vertices v1..vn with edges e1..em given as (tail, head) index pairs.
    static OrientedGraph from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                    std::string name = {})
    {
        std::vector<std::string> vs(n);
        for (std::size_t i = 0; i < n; ++i)
            vs[i] = "v" + std::to_string(i + 1);
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k)
            es.push_back(Edge{"e" + std::to_string(k + 1), pairs[k].first, pairs[k].second});
        return OrientedGraph(std::move(name), std::move(vs), std::move(es));
    }

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t simplex_count() const noexcept { return vertices_.size() + edges_.size(); }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }

    /// Edge indices incident to v, ascending.
    const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_.at(v); }
    std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }

    std::optional<std::size_t> vertex_index(const std::string& id) const
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == id)
                return i;
        return std::nullopt;
    }

    std::optional<std::size_t> edge_index(const std::string& id) const
    {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].id == id)
                return i;
        return std::nullopt;
    }

    std::size_t require_vertex(const std::string& id) const
    {
        if (auto v = vertex_index(id))
            return *v;
        throw Error(ErrorCode::UnknownId, "no vertex '" + id + "'", id);
    }

    std::size_t require_edge(const std::string& id) const
    {
        if (auto e = edge_index(id))
            return *e;
        throw Error(ErrorCode::UnknownId, "no edge '" + id + "'", id);
    }

    /// Index of the edge joining a and b in either orientation.
    std::optional<std::size_t> edge_between(std::size_t a, std::size_t b) const
    {
        for (std::size_t e : incident_.at(a))
            if (edges_[e].other(a) == b)
                return e;
        return std::nullopt;
    }

    /// Copy with edge e replaced; re-validates simplicity.
    OrientedGraph with_edge(std::size_t e, Edge replacement) const
    {
        auto es = edges_;
        es.at(e) = std::move(replacement);
        return OrientedGraph(name_, vertices_, std::move(es));
    }

    /// Copy with edge e removed.
    OrientedGraph without_edge(std::size_t e) const
    {
        auto es = edges_;
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(e));
        return OrientedGraph(name_, vertices_, std::move(es));
    }

    OrientedGraph renamed(std::string name) const
    {
        OrientedGraph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b)
    {
        return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void validate() const
    {
        std::unordered_set<std::string> seen;
        for (const auto& v : vertices_)
            if (!seen.insert(v).second)
                throw Error(ErrorCode::DuplicateId, "vertex '" + v + "' appears twice", v);
        std::unordered_set<std::string> edge_ids;
        std::unordered_set<std::size_t> pairs;
        const std::size_t n = vertices_.size();
        for (const auto& e : edges_) {
            if (!edge_ids.insert(e.id).second)
                throw Error(ErrorCode::DuplicateId, "edge '" + e.id + "' appears twice", e.id);
            if (e.tail >= n || e.head >= n)
                throw Error(ErrorCode::DanglingEndpoint, "edge '" + e.id + "' references a missing vertex", e.id);
            if (e.tail == e.head)
                throw Error(ErrorCode::SelfLoop, "edge '" + e.id + "' starts and ends at one vertex", e.id);
            const std::size_t lo = std::min(e.tail, e.head);
            const std::size_t hi = std::max(e.tail, e.head);
            if (!pairs.insert(lo * n + hi).second)
                throw Error(ErrorCode::ParallelEdge, "edge '" + e.id + "' duplicates an existing endpoint pair",
                            e.id);
        }
    }

    void build_incidence()
    {
        incident_.assign(vertices_.size(), {});
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            incident_[edges_[k].tail].push_back(k);
            incident_[edges_[k].head].push_back(k);
        }
    }

    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

// ---------------------------------------------------------------------------
// Canonical matrices

/// Symmetric 0/1 adjacency matrix with zero diagonal.
inline IntMatrix adjacency_matrix(const OrientedGraph& g)
{
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges()) {
        a(e.tail, e.head) = 1;
        a(e.head, e.tail) = 1;
    }
    return a;
}

/// |V| x |E|: +1 at (head, e), -1 at (tail, e).
inline IntMatrix incidence_matrix(const OrientedGraph& g)
{
    IntMatrix inc(g.vertex_count(), g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        inc(g.edge(k).head, k) = 1;
        inc(g.edge(k).tail, k) = -1;
    }
    return inc;
}

inline IntMatrix degree_matrix(const OrientedGraph& g)
{
    IntMatrix d(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        d(v, v) = static_cast<std::int64_t>(g.degree(v));
    return d;
}

// ---------------------------------------------------------------------------
// Combinatorial topology

/// Component label per vertex; labels number components in order of their
/// smallest vertex.
inline std::vector<std::size_t> component_labels(const OrientedGraph& g)
{
    const std::size_t n = g.vertex_count();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::size_t next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (label[root] != unset)
            continue;
        label[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : g.incident_edges(v)) {
                const std::size_t w = g.edge(e).other(v);
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

/// Vertex partition, each part ascending, parts ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(const OrientedGraph& g)
{
    const auto label = component_labels(g);
    std::size_t count = 0;
    for (std::size_t l : label)
        count = std::max(count, l + 1);
    std::vector<std::vector<std::size_t>> parts(count);
    for (std::size_t v = 0; v < label.size(); ++v)
        parts[label[v]].push_back(v);
    return parts;
}

inline std::size_t component_count(const OrientedGraph& g)
{
    return connected_components(g).size();
}

inline bool is_connected(const OrientedGraph& g)
{
    return component_count(g) == 1;
}

/// |E| - |V| + #components.
inline std::size_t cycle_rank(const OrientedGraph& g)
{
    return g.edge_count() + component_count(g) - g.vertex_count();
}

/// |V| - |E|.
inline long long euler_characteristic(const OrientedGraph& g)
{
    return static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count());
}

/// Depth-first spanning forest, each tree rooted at the smallest vertex of
/// its component; incident edges are explored in edge order.
struct SpanningForest {
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent;      // parent vertex, none at roots
    std::vector<std::size_t> parent_edge; // edge to parent, none at roots
    std::vector<std::size_t> depth;
    std::vector<bool> tree_edge;
};

inline SpanningForest dfs_forest(const OrientedGraph& g)
{
    const std::size_t n = g.vertex_count();
    SpanningForest f;
    f.parent.assign(n, SpanningForest::none);
    f.parent_edge.assign(n, SpanningForest::none);
    f.depth.assign(n, 0);
    f.tree_edge.assign(g.edge_count(), false);
    std::vector<bool> seen(n, false);
    // (vertex, next incident position)
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            const auto& inc = g.incident_edges(v);
            if (pos == inc.size()) {
                stack.pop_back();
                continue;
            }
            const std::size_t e = inc[pos++];
            const std::size_t w = g.edge(e).other(v);
            if (seen[w])
                continue;
            seen[w] = true;
            f.parent[w] = v;
            f.parent_edge[w] = e;
            f.depth[w] = f.depth[v] + 1;
            f.tree_edge[e] = true;
            stack.emplace_back(w, 0);
        }
    }
    return f;
}

/// Fundamental cycles of the DFS forest, one per non-tree edge (in edge
/// order). Each vector traverses its non-tree edge along the orientation and
/// returns through the tree; entries are +1 where the traversal follows the
/// edge orientation and -1 where it opposes it.
inline std::vector<std::vector<int>> fundamental_cycle_basis(const OrientedGraph& g)
{
    const auto f = dfs_forest(g);
    std::vector<std::vector<int>> basis;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (f.tree_edge[e])
            continue;
        std::vector<int> c(g.edge_count(), 0);
        c[e] = 1;
        // return from head to tail through the tree: climb from whichever
        // side is deeper until both meet
        std::size_t a = g.edge(e).head;
        std::size_t b = g.edge(e).tail;
        while (a != b) {
            if (f.depth[a] >= f.depth[b]) {
                const std::size_t pe = f.parent_edge[a];
                c[pe] = g.edge(pe).tail == a ? 1 : -1;
                a = f.parent[a];
            } else {
                // traversed downward, parent(b) -> b
                const std::size_t pe = f.parent_edge[b];
                c[pe] = g.edge(pe).head == b ? 1 : -1;
                b = f.parent[b];
            }
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

/// Edges lying on no cycle, ascending edge index.
inline std::vector<std::size_t> bridge_indices(const OrientedGraph& g)
{
    std::vector<bool> on_cycle(g.edge_count(), false);
    for (const auto& c : fundamental_cycle_basis(g))
        for (std::size_t e = 0; e < c.size(); ++e)
            if (c[e] != 0)
                on_cycle[e] = true;
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!on_cycle[e])
            out.push_back(e);
    return out;
}

inline std::vector<std::string> bridges(const OrientedGraph& g)
{
    std::vector<std::string> ids;
    for (std::size_t e : bridge_indices(g))
        ids.push_back(g.edge(e).id);
    return ids;
}

} // namespace graphsusy
