#pragma once

// Discrete Morse functions on graphs viewed as 1-dimensional complexes.
//
// A pair (v, e) with v an end of e and f(v) ≥ f(e) is a "wrong-way" pair.
// f is a discrete Morse function when every vertex and every edge belongs to
// at most one wrong-way pair. Critical simplices are exactly the unpaired
// ones (strict inequalities), and the wrong-way pairs are the gradient.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "graphsusy/graph.hpp"
#include "graphsusy/spectral.hpp"

namespace graphsusy {

struct MorseFunction {
    std::vector<double> vertex_values;
    std::vector<double> edge_values;
};

struct MorseViolation {
    Sector simplex_kind = Sector::Vertex; // Vertex or Edge
    std::size_t index = 0;
    std::vector<std::size_t> offenders; // edges (for a vertex) or vertices (for an edge)
};

struct MorseValidation {
    bool valid = true;
    std::vector<MorseViolation> violations;
};

inline void require_complete(const OrientedGraph& g, const MorseFunction& f)
{
    if (f.vertex_values.size() != g.vertex_count() || f.edge_values.size() != g.edge_count())
        throw Error(ErrorCode::InvalidArgument, "function must assign a value to every vertex and edge");
}

inline MorseValidation is_discrete_morse(const OrientedGraph& g, const MorseFunction& f)
{
    require_complete(g, f);
    MorseValidation out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::size_t> low;
        for (std::size_t e : g.incident_edges(v))
            if (f.edge_values[e] <= f.vertex_values[v])
                low.push_back(e);
        if (low.size() > 1)
            out.violations.push_back({Sector::Vertex, v, std::move(low)});
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::vector<std::size_t> high;
        for (std::size_t v : {g.edge(e).tail, g.edge(e).head})
            if (f.vertex_values[v] >= f.edge_values[e])
                high.push_back(v);
        if (high.size() > 1) {
            std::sort(high.begin(), high.end());
            out.violations.push_back({Sector::Edge, e, std::move(high)});
        }
    }
    out.valid = out.violations.empty();
    return out;
}

inline void require_morse(const OrientedGraph& g, const MorseFunction& f)
{
    const auto check = is_discrete_morse(g, f);
    if (!check.valid) {
        const auto& v = check.violations.front();
        const std::string id = v.simplex_kind == Sector::Vertex ? g.vertices()[v.index] : g.edge(v.index).id;
        throw Error(ErrorCode::NotMorse, "violation at '" + id + "'", id);
    }
}

struct CriticalSet {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
};

/// Vertices strictly below all incident edges; edges strictly above both ends.
inline CriticalSet critical_simplices(const OrientedGraph& g, const MorseFunction& f)
{
    require_morse(g, f);
    CriticalSet c;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        if (std::all_of(inc.begin(), inc.end(), [&](std::size_t e) { return f.edge_values[e] > f.vertex_values[v]; }))
            c.vertices.push_back(v);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (f.vertex_values[ed.tail] < f.edge_values[e] && f.vertex_values[ed.head] < f.edge_values[e])
            c.edges.push_back(e);
    }
    return c;
}

struct GradientPair {
    std::size_t vertex = 0;
    std::size_t edge = 0;
    friend bool operator==(const GradientPair&, const GradientPair&) = default;
};

/// Each non-critical edge with its unique end vertex of value ≥ the edge's.
inline std::vector<GradientPair> gradient_pairs(const OrientedGraph& g, const MorseFunction& f)
{
    require_morse(g, f);
    std::vector<GradientPair> pairs;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        for (std::size_t v : {g.edge(e).tail, g.edge(e).head})
            if (f.vertex_values[v] >= f.edge_values[e])
                pairs.push_back({v, e});
    return pairs;
}

struct MorseConsistency {
    std::size_t critical_vertices = 0;
    std::size_t critical_edges = 0;
    long long euler = 0;
    BettiNumbers betti;
    bool partition_ok = false; // critical ∪ paired covers every simplex exactly once
    bool euler_ok = false;     // crit0 - crit1 = χ
    bool weak_inequalities_ok = false; // crit0 ≥ b0, crit1 ≥ b1
    bool all_ok() const noexcept { return partition_ok && euler_ok && weak_inequalities_ok; }
};

inline MorseConsistency morse_consistency(const OrientedGraph& g, const MorseFunction& f)
{
    const auto crit = critical_simplices(g, f);
    const auto pairs = gradient_pairs(g, f);
    MorseConsistency r;
    r.critical_vertices = crit.vertices.size();
    r.critical_edges = crit.edges.size();
    r.euler = euler_characteristic(g);
    r.betti = betti_numbers(g);

    std::vector<int> vcover(g.vertex_count(), 0), ecover(g.edge_count(), 0);
    for (std::size_t v : crit.vertices)
        ++vcover[v];
    for (std::size_t e : crit.edges)
        ++ecover[e];
    for (const auto& p : pairs) {
        ++vcover[p.vertex];
        ++ecover[p.edge];
    }
    r.partition_ok = std::all_of(vcover.begin(), vcover.end(), [](int c) { return c == 1; }) &&
                     std::all_of(ecover.begin(), ecover.end(), [](int c) { return c == 1; });
    r.euler_ok = static_cast<long long>(r.critical_vertices) - static_cast<long long>(r.critical_edges) == r.euler;
    r.weak_inequalities_ok = r.critical_vertices >= r.betti.b0 && r.critical_edges >= r.betti.b1;
    return r;
}

/// f(σ) = dim σ: always Morse, every simplex critical.
inline MorseFunction dimension_function(const OrientedGraph& g)
{
    return {std::vector<double>(g.vertex_count(), 0.0), std::vector<double>(g.edge_count(), 1.0)};
}

/// Random Morse function: distinct values from a random injection, then
/// violations repaired by raising edge values. Raising an edge never creates
/// a new violation, so repair terminates; a draw with ties left over is
/// rejected and retried (up to 100 attempts).
template <typename Rng>
MorseFunction random_morse_function(const OrientedGraph& g, Rng& rng)
{
    const std::size_t n = g.simplex_count();
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> slots(n);
        for (std::size_t i = 0; i < n; ++i)
            slots[i] = static_cast<double>(i);
        std::shuffle(slots.begin(), slots.end(), rng);
        MorseFunction f{{slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(g.vertex_count())},
                        {slots.begin() + static_cast<std::ptrdiff_t>(g.vertex_count()), slots.end()}};
        std::uniform_real_distribution<double> jitter(0.05, 0.45);

        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                std::vector<std::size_t> low;
                for (std::size_t e : g.incident_edges(v))
                    if (f.edge_values[e] <= f.vertex_values[v])
                        low.push_back(e);
                if (low.size() <= 1)
                    continue;
                std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
                const std::size_t keep = low[pick(rng)];
                for (std::size_t e : low)
                    if (e != keep)
                        f.edge_values[e] = f.vertex_values[v] + jitter(rng);
                changed = true;
            }
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                const auto& ed = g.edge(e);
                const double a = f.vertex_values[ed.tail];
                const double b = f.vertex_values[ed.head];
                if (a >= f.edge_values[e] && b >= f.edge_values[e]) {
                    f.edge_values[e] = std::min(a, b) + jitter(rng);
                    changed = true;
                }
            }
        }

        auto all = f.vertex_values;
        all.insert(all.end(), f.edge_values.begin(), f.edge_values.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) == all.end() && is_discrete_morse(g, f).valid)
            return f;
    }
    throw Error(ErrorCode::NoConvergence, "could not draw a Morse function with distinct values");
}

} // namespace graphsusy
