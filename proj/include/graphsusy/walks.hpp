#pragma once

// Walk enumeration and the signed walk-sum identities.
//
// Index spaces: plain walks and vertex superwalks run between vertex
// indices, edge superwalks between edge indices, vertex-edge walks between
// combined simplex indices (vertices first, then |V| + edge index).
//
// Sign conventions follow the incidence orientation: a vertex-edge step
// between v and e has sign +1 if e enters v and -1 if e leaves v. Power
// identities are stated for Δ+ = D - A; walk sums for Δ_walk = A - D.

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "graphsusy/dynamics.hpp"
#include "graphsusy/operators.hpp"

namespace graphsusy {

enum class WalkKind { Plain, VertexSuper, EdgeSuper, VertexEdge };

constexpr std::string_view to_string(WalkKind k) noexcept
{
    switch (k) {
    case WalkKind::Plain: return "plain";
    case WalkKind::VertexSuper: return "vertex-super";
    case WalkKind::EdgeSuper: return "edge-super";
    case WalkKind::VertexEdge: return "vertex-edge";
    }
    return "?";
}

/// One walk. `steps` lists vertex indices for plain walks and the full
/// alternating vertex/edge sequence (combined indices) for every other kind,
/// so superwalks record the simplex they pass through at each step.
struct WalkRecord {
    WalkKind kind = WalkKind::Plain;
    std::vector<std::size_t> steps;
    int sign = 1;
    std::size_t hesitations = 0;

    std::size_t length() const noexcept
    {
        if (steps.empty())
            return 0;
        const std::size_t hops = steps.size() - 1;
        return (kind == WalkKind::VertexSuper || kind == WalkKind::EdgeSuper) ? hops / 2 : hops;
    }
};

struct EnumerationCaps {
    std::size_t max_length = 8;
    std::size_t max_edges = 12;
};

namespace detail {

struct WalkStep {
    std::size_t next = 0;            // in the kind's own index space
    std::array<std::size_t, 2> path{}; // combined (or vertex) indices appended to the record
    std::uint8_t path_len = 0;
    int sign = 1;
    bool hesitation = false;
};

// I(v, e) restricted to incident pairs.
inline int incidence_sign(const Edge& e, std::size_t v) noexcept { return e.head == v ? 1 : -1; }

inline std::array<std::size_t, 2> sorted_ends(const Edge& e) noexcept
{
    return {std::min(e.tail, e.head), std::max(e.tail, e.head)};
}

/// Transition table of one walk kind; steps per state are in ascending
/// order of the appended path, which makes DFS order lexicographic.
inline std::vector<std::vector<WalkStep>> step_table(const OrientedGraph& g, WalkKind kind)
{
    const std::size_t m = g.vertex_count();
    std::vector<std::vector<WalkStep>> table;
    switch (kind) {
    case WalkKind::Plain: {
        table.resize(m);
        for (std::size_t v = 0; v < m; ++v) {
            for (std::size_t e : g.incident_edges(v)) {
                const std::size_t w = g.edge(e).other(v);
                table[v].push_back({w, {w, 0}, 1, 1, false});
            }
            std::sort(table[v].begin(), table[v].end(),
                      [](const WalkStep& a, const WalkStep& b) { return a.next < b.next; });
        }
        break;
    }
    case WalkKind::VertexSuper: {
        // through an incident edge to either end: +1 back to v (hesitation), -1 across
        table.resize(m);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t e : g.incident_edges(v))
                for (std::size_t w : sorted_ends(g.edge(e)))
                    table[v].push_back({w, {m + e, w}, 2, w == v ? 1 : -1, w == v});
        break;
    }
    case WalkKind::EdgeSuper: {
        // through an end vertex to an incident edge: +1 back to e (hesitation);
        // otherwise +1 when both edges enter or both leave the shared vertex
        table.resize(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            for (std::size_t v : sorted_ends(g.edge(e)))
                for (std::size_t f : g.incident_edges(v)) {
                    const bool same = f == e;
                    const bool aligned = (g.edge(e).head == v) == (g.edge(f).head == v);
                    table[e].push_back({f, {v, m + f}, 2, (same || aligned) ? 1 : -1, same});
                }
        break;
    }
    case WalkKind::VertexEdge: {
        table.resize(g.simplex_count());
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t e : g.incident_edges(v))
                table[v].push_back({m + e, {m + e, 0}, 1, incidence_sign(g.edge(e), v), false});
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            for (std::size_t v : sorted_ends(g.edge(e)))
                table[m + e].push_back({v, {v, 0}, 1, incidence_sign(g.edge(e), v), false});
        break;
    }
    }
    return table;
}

inline std::size_t state_count(const OrientedGraph& g, WalkKind kind) noexcept
{
    switch (kind) {
    case WalkKind::Plain:
    case WalkKind::VertexSuper: return g.vertex_count();
    case WalkKind::EdgeSuper: return g.edge_count();
    case WalkKind::VertexEdge: return g.simplex_count();
    }
    return 0;
}

inline std::size_t start_path_index(const OrientedGraph& g, WalkKind kind, std::size_t start) noexcept
{
    return kind == WalkKind::EdgeSuper ? g.vertex_count() + start : start;
}

inline void check_caps(const OrientedGraph& g, std::size_t length, const EnumerationCaps& caps)
{
    if (length > caps.max_length)
        throw Error(ErrorCode::CapExceeded, "walk length " + std::to_string(length) + " exceeds the cap of " +
                                                std::to_string(caps.max_length));
    if (g.edge_count() > caps.max_edges)
        throw Error(ErrorCode::CapExceeded, "graph has " + std::to_string(g.edge_count()) +
                                                " edges; enumeration is capped at " +
                                                std::to_string(caps.max_edges));
}

inline void check_index(const OrientedGraph& g, WalkKind kind, std::size_t idx)
{
    if (idx >= state_count(g, kind))
        throw Error(ErrorCode::InvalidArgument, "index " + std::to_string(idx) + " is out of range for " +
                                                    std::string(to_string(kind)) + " walks");
}

} // namespace detail

/// [A^k]_ij, the number of walks of length k from v_i to v_j.
inline std::int64_t count_walks(const OrientedGraph& g, std::size_t i, std::size_t j, unsigned k)
{
    detail::check_index(g, WalkKind::Plain, i);
    detail::check_index(g, WalkKind::Plain, j);
    return matrix_power(adjacency_matrix(g), k)(i, j);
}

/// Every walk of the given kind and length from i to j, in lexicographic
/// order of `steps`.
inline std::vector<WalkRecord> enumerate_walks(const OrientedGraph& g, std::size_t i, std::size_t j, std::size_t k,
                                               WalkKind kind, const EnumerationCaps& caps = {})
{
    detail::check_caps(g, k, caps);
    detail::check_index(g, kind, i);
    detail::check_index(g, kind, j);
    const auto table = detail::step_table(g, kind);
    std::vector<WalkRecord> out;
    std::vector<std::size_t> path{detail::start_path_index(g, kind, i)};

    auto dfs = [&](auto&& self, std::size_t state, std::size_t depth, int sign, std::size_t hes) -> void {
        if (depth == k) {
            if (state == j)
                out.push_back({kind, path, sign, hes});
            return;
        }
        for (const auto& s : table[state]) {
            for (std::uint8_t p = 0; p < s.path_len; ++p)
                path.push_back(s.path[p]);
            self(self, s.next, depth + 1, sign * s.sign, hes + (s.hesitation ? 1 : 0));
            path.resize(path.size() - s.path_len);
        }
    };
    dfs(dfs, i, 0, 1, 0);
    return out;
}

/// S_k[i][j] = Σ sgn over walks of length k from i to j, for k = 0..k_max,
/// by exhaustive depth-first enumeration (no matrix products).
inline std::vector<IntMatrix> signed_walk_sums(const OrientedGraph& g, WalkKind kind, std::size_t k_max,
                                               const EnumerationCaps& caps = {})
{
    detail::check_caps(g, k_max, caps);
    const std::size_t n = detail::state_count(g, kind);
    const auto table = detail::step_table(g, kind);
    std::vector<IntMatrix> sums(k_max + 1, IntMatrix(n, n));
    for (std::size_t start = 0; start < n; ++start) {
        auto dfs = [&](auto&& self, std::size_t state, std::size_t depth, int sign) -> void {
            sums[depth](start, state) += sign;
            if (depth == k_max)
                return;
            for (const auto& s : table[state])
                self(self, s.next, depth + 1, sign * s.sign);
        };
        dfs(dfs, start, 0, 1);
    }
    return sums;
}

struct PowerViolation {
    WalkKind kind = WalkKind::Plain;
    std::size_t k = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::int64_t matrix_value = 0;
    std::int64_t walk_sum = 0;
};

struct PowerIdentityReport {
    bool holds = true;
    std::size_t k_max = 0;
    std::size_t entries_checked = 0;
    std::vector<PowerViolation> violations;
};

/// Checks, exactly and for every k ≤ k_max and index pair:
///   [A^k]   = #plain walks,
///   [Δ+^k]  = Σ sgn(vertex superwalks),
///   [Δ-^k]  = Σ sgn(edge superwalks),
///   [D_I^k] = Σ sgn(vertex-edge walks).
inline PowerIdentityReport verify_power_identities(const OrientedGraph& g, std::size_t k_max,
                                                   const EnumerationCaps& caps = {})
{
    detail::check_caps(g, k_max, caps);
    PowerIdentityReport rep;
    rep.k_max = k_max;
    const std::array<std::pair<WalkKind, IntMatrix>, 4> cases{{
        {WalkKind::Plain, adjacency_matrix(g)},
        {WalkKind::VertexSuper, laplacian_even(g)},
        {WalkKind::EdgeSuper, laplacian_odd(g)},
        {WalkKind::VertexEdge, dirac_incidence(g).matrix},
    }};
    for (const auto& [kind, base] : cases) {
        const auto sums = signed_walk_sums(g, kind, k_max, caps);
        IntMatrix power = IntMatrix::identity(base.rows());
        for (std::size_t k = 0; k <= k_max; ++k) {
            if (k > 0)
                power = power * base;
            for (std::size_t i = 0; i < power.rows(); ++i)
                for (std::size_t j = 0; j < power.cols(); ++j) {
                    ++rep.entries_checked;
                    if (power(i, j) != sums[k](i, j)) {
                        rep.holds = false;
                        rep.violations.push_back({kind, k, i, j, power(i, j), sums[k](i, j)});
                    }
                }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Walk sums

/// Rigorous remainder of the exponential series: Σ_{k>K} x^k/k!, bounded
/// by x^{K+1}/(K+1)! / (1 - x/(K+2)). Returns +inf when the bound does not
/// apply yet (K+2 ≤ x).
inline double exponential_tail_bound(double x, std::size_t K)
{
    const double ratio = x / static_cast<double>(K + 2);
    if (ratio >= 1.0)
        return std::numeric_limits<double>::infinity();
    double term = 1.0;
    for (std::size_t k = 1; k <= K + 1; ++k)
        term *= x / static_cast<double>(k);
    return term / (1.0 - ratio);
}

enum class WalkSumMethod {
    Aggregated, ///< signed sums accumulated step by step over superwalks
    Enumerated, ///< every superwalk listed explicitly (subject to caps)
};

struct WalkSumResult {
    double value = 0.0;
    std::size_t terms = 0; ///< highest walk length included
    double tail_bound = 0.0;
};

/// Σ_k t^k/k! (-1)^k Σ_{γ ∈ W_k,ij} deg(γ) over vertex superwalks, truncated
/// once the remainder bound (|t|·‖A-D‖∞)^k/k! tail is below tail_tol.
/// Equals [e^{t(A-D)}]_ij.
inline WalkSumResult walk_sum_propagator(const OrientedGraph& g, std::size_t i, std::size_t j, double t,
                                         double tail_tol, WalkSumMethod method = WalkSumMethod::Aggregated,
                                         const EnumerationCaps& caps = {})
{
    detail::check_index(g, WalkKind::VertexSuper, i);
    detail::check_index(g, WalkKind::VertexSuper, j);
    if (!(tail_tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "tail tolerance must be positive");
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    const double x = std::abs(t) * 2.0 * static_cast<double>(max_degree);

    std::size_t K = 0;
    while (exponential_tail_bound(x, K) >= tail_tol) {
        ++K;
        if (K > 100000)
            throw Error(ErrorCode::CapExceeded, "walk sum needs too many terms");
    }

    WalkSumResult r;
    r.terms = K;
    r.tail_bound = exponential_tail_bound(x, K);

    if (method == WalkSumMethod::Enumerated) {
        if (K > caps.max_length)
            throw Error(ErrorCode::CapExceeded, "tail bound needs walks of length " + std::to_string(K) +
                                                    " but enumeration is capped at " +
                                                    std::to_string(caps.max_length));
        double coef = 1.0; // (-t)^k / k!
        for (std::size_t k = 0; k <= K; ++k) {
            if (k > 0)
                coef *= -t / static_cast<double>(k);
            long long s = 0;
            for (const auto& w : enumerate_walks(g, i, j, k, WalkKind::VertexSuper, caps))
                s += w.sign;
            r.value += coef * static_cast<double>(s);
        }
        return r;
    }

    const auto table = detail::step_table(g, WalkKind::VertexSuper);
    // u[x] = (-t)^k/k! · Σ sgn over length-k superwalks from i ending at x
    std::vector<double> u(g.vertex_count(), 0.0), next(g.vertex_count());
    u[i] = 1.0;
    r.value = u[j];
    for (std::size_t k = 1; k <= K; ++k) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t v = 0; v < u.size(); ++v) {
            if (u[v] == 0.0)
                continue;
            for (const auto& s : table[v])
                next[s.next] += s.sign * u[v];
        }
        const double c = -t / static_cast<double>(k);
        for (std::size_t v = 0; v < u.size(); ++v)
            u[v] = c * next[v];
        r.value += u[j];
    }
    return r;
}

inline bool is_regular(const OrientedGraph& g, std::size_t* degree = nullptr)
{
    if (g.vertex_count() == 0)
        return true;
    const std::size_t d = g.degree(0);
    for (std::size_t v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d)
            return false;
    if (degree)
        *degree = d;
    return true;
}

/// Regular-graph form: e^{-dt} Σ_n t^n/n! W_{n,ij} with W the plain walk
/// counts and d the common degree. Equals [e^{t(A - d·1)}]_ij.
inline WalkSumResult regular_walk_sum_propagator(const OrientedGraph& g, std::size_t i, std::size_t j, double t,
                                                 double tail_tol)
{
    detail::check_index(g, WalkKind::Plain, i);
    detail::check_index(g, WalkKind::Plain, j);
    std::size_t d = 0;
    if (!is_regular(g, &d))
        throw Error(ErrorCode::InvalidArgument, "graph is not regular");
    const double prefactor = std::exp(-static_cast<double>(d) * t);
    const double x = std::abs(t) * static_cast<double>(d);
    // the prefactor scales the remainder too
    std::size_t K = 0;
    while (prefactor * exponential_tail_bound(x, K) >= tail_tol)
        ++K;

    const auto table = detail::step_table(g, WalkKind::Plain);
    std::vector<double> u(g.vertex_count(), 0.0), next(g.vertex_count());
    u[i] = 1.0;
    double sum = u[j];
    for (std::size_t k = 1; k <= K; ++k) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t v = 0; v < u.size(); ++v)
            for (const auto& s : table[v])
                next[s.next] += u[v];
        for (std::size_t v = 0; v < u.size(); ++v)
            u[v] = t / static_cast<double>(k) * next[v];
        sum += u[j];
    }
    return {prefactor * sum, K, prefactor * exponential_tail_bound(x, K)};
}

/// Z(t) = Tr e^{t(A-D)}.
inline double partition_function(const OrientedGraph& g, double t)
{
    return euclidean_propagator(g, t, PropagatorConvention::Walk).trace();
}

/// Z(t) as a sum over closed superwalks.
inline double closed_walk_partition_function(const OrientedGraph& g, double t, double tail_tol)
{
    double z = 0.0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        z += walk_sum_propagator(g, v, v, t, tail_tol).value;
    return z;
}

/// Diagonal of e^{t D_I²} at one simplex against the closed form
/// Σ t^k/k! (one-step return count)^k, i.e. e^{t·deg(v)} at a vertex and
/// e^{2t} at an edge. The two share their t⁰ and t¹ coefficients; the
/// closed form raises a matrix entry to the k-th power where the exact
/// series needs the entry of the k-th power, so they part at t².
struct DiracTraceComparison {
    double exact = 0.0;
    double closed_form = 0.0;
    std::array<std::int64_t, 3> exact_coefficients{};       // [Δ_S^k]_σσ, k = 0,1,2
    std::array<std::int64_t, 3> closed_form_coefficients{}; // r^k
    std::array<bool, 3> agrees{};
    bool diverges() const noexcept { return !agrees[2]; }
};

inline DiracTraceComparison dirac_trace_comparison(const OrientedGraph& g, std::size_t simplex, double t)
{
    detail::check_index(g, WalkKind::VertexEdge, simplex);
    const auto lap = laplacian_susy(g).matrix;
    const std::int64_t returns = simplex < g.vertex_count() ? static_cast<std::int64_t>(g.degree(simplex)) : 2;

    DiracTraceComparison c;
    const auto spec = eig_sym(lap.cast<double>());
    double exact = 0.0;
    for (std::size_t k = 0; k < spec.dim(); ++k)
        exact += spec.eigenvectors(simplex, k) * spec.eigenvectors(simplex, k) * std::exp(t * spec.eigenvalues[k]);
    c.exact = exact;
    c.closed_form = std::exp(t * static_cast<double>(returns));

    IntMatrix power = IntMatrix::identity(lap.rows());
    std::int64_t rk = 1;
    for (std::size_t k = 0; k < 3; ++k) {
        if (k > 0) {
            power = power * lap;
            rk *= returns;
        }
        c.exact_coefficients[k] = power(simplex, simplex);
        c.closed_form_coefficients[k] = rk;
        c.agrees[k] = c.exact_coefficients[k] == c.closed_form_coefficients[k];
    }
    return c;
}

} // namespace graphsusy
