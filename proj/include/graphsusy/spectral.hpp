#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "graphsusy/eigensolver.hpp"
#include "graphsusy/graph.hpp"
#include "graphsusy/operators.hpp"

namespace graphsusy {

/// Default numerical-zero threshold: 1e-8 · max(1, |λ|max).
inline double default_kernel_tolerance(const std::vector<double>& eigenvalues)
{
    double lmax = 0.0;
    for (double l : eigenvalues)
        lmax = std::max(lmax, std::abs(l));
    return 1e-8 * std::max(1.0, lmax);
}

/// Eigenvalues in [tol/ambiguity_band, tol·ambiguity_band) are neither
/// clearly zero nor clearly nonzero.
inline constexpr double ambiguity_band = 100.0;

/// Number of eigenvalues below tol. Throws AmbiguousKernel when some
/// eigenvalue sits too close to the threshold to classify.
inline std::size_t kernel_dimension(const std::vector<double>& eigenvalues, double tol)
{
    std::size_t count = 0;
    for (double l : eigenvalues) {
        if (l >= tol / ambiguity_band && l < tol * ambiguity_band)
            throw Error(ErrorCode::AmbiguousKernel,
                        "eigenvalue " + std::to_string(l) + " is too close to tolerance " + std::to_string(tol));
        if (l < tol)
            ++count;
    }
    return count;
}

struct KernelBasis {
    std::vector<std::vector<double>> vectors;
    double tolerance = 0.0;
    std::size_t dim() const noexcept { return vectors.size(); }
};

/// Orthonormal basis of the numerical null space of a symmetric matrix.
inline KernelBasis kernel_basis(const RealMatrix& m, std::optional<double> tol = std::nullopt)
{
    const auto spec = eig_sym(m);
    KernelBasis kb;
    kb.tolerance = tol.value_or(default_kernel_tolerance(spec.eigenvalues));
    const std::size_t dim = kernel_dimension(spec.eigenvalues, kb.tolerance);
    for (std::size_t k = 0; k < dim; ++k)
        kb.vectors.push_back(spec.vector(k));
    return kb;
}

inline std::size_t kernel_dimension(const RealMatrix& m, std::optional<double> tol = std::nullopt)
{
    const auto ev = eigvals_sym(m);
    return kernel_dimension(ev, tol.value_or(default_kernel_tolerance(ev)));
}

struct BettiNumbers {
    std::size_t b0 = 0;
    std::size_t b1 = 0;
    friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// (b0, b1) from Laplacian kernels, cross-checked against the combinatorial
/// component count and cycle rank.
inline BettiNumbers betti_numbers(const OrientedGraph& g)
{
    const std::size_t k_even = kernel_dimension(laplacian_even(g).cast<double>());
    const std::size_t k_odd = kernel_dimension(laplacian_odd(g).cast<double>());
    const std::size_t cc = component_count(g);
    const std::size_t cr = cycle_rank(g);
    if (k_even != cc || k_odd != cr)
        throw Error(ErrorCode::RouteDisagreement,
                    "kernel dimensions (" + std::to_string(k_even) + ", " + std::to_string(k_odd) +
                        ") disagree with topology (" + std::to_string(cc) + ", " + std::to_string(cr) + ")");
    return {k_even, k_odd};
}

/// Second-smallest eigenvalue of Δ+.
inline double fiedler_value(const OrientedGraph& g)
{
    if (g.vertex_count() < 2)
        throw Error(ErrorCode::InvalidArgument, "Fiedler value needs at least 2 vertices");
    return eigvals_sym(laplacian_even(g).cast<double>())[1];
}

struct MerrisReport {
    double lambda_max = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// λmax(Δ+) against max over v of d(v) + m(v), m(v) the mean neighbour degree.
/// Isolated vertices contribute d(v) = 0 and are skipped.
inline MerrisReport merris_bound_check(const OrientedGraph& g)
{
    if (g.edge_count() == 0)
        throw Error(ErrorCode::InvalidArgument, "Merris bound is undefined on an edgeless graph");
    MerrisReport r;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        if (inc.empty())
            continue;
        double sum = 0.0;
        for (std::size_t e : inc)
            sum += static_cast<double>(g.degree(g.edge(e).other(v)));
        r.bound = std::max(r.bound, static_cast<double>(inc.size()) + sum / static_cast<double>(inc.size()));
    }
    r.lambda_max = eigvals_sym(laplacian_even(g).cast<double>()).back();
    r.holds = r.lambda_max <= r.bound + 1e-9;
    return r;
}

/// D^{-1/2} Δ+ D^{-1/2}; requires every vertex to have an edge.
inline RealMatrix normalized_laplacian(const OrientedGraph& g)
{
    const std::size_t n = g.vertex_count();
    RealMatrix lap = laplacian_even(g).cast<double>();
    std::vector<double> s(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            throw Error(ErrorCode::InvalidArgument, "isolated vertex '" + g.vertices()[v] + "'", g.vertices()[v]);
        s[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lap(i, j) *= s[i] * s[j];
    return lap;
}

struct CheegerReport {
    double h = 0.0;
    double lambda2 = 0.0;
    bool holds = false;
};

inline constexpr std::size_t cheeger_vertex_cap = 20;

/// Brute-force conductance h = min |∂S| / min(vol S, vol S̄) over nonempty
/// proper subsets, with λ2 of the normalized Laplacian; holds when
/// 2h ≥ λ2 ≥ h²/2.
inline CheegerReport cheeger_report(const OrientedGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > cheeger_vertex_cap)
        throw Error(ErrorCode::TooLarge, "brute-force Cheeger constant is capped at 20 vertices");
    if (n < 2 || !is_connected(g))
        throw Error(ErrorCode::Disconnected, "Cheeger constant needs a connected graph with 2+ vertices");
    const auto norm = normalized_laplacian(g);

    std::vector<std::size_t> deg(n);
    double vol_total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        vol_total += static_cast<double>(deg[v]);
    }
    double h = std::numeric_limits<double>::infinity();
    // fixing vertex n-1 outside S visits each bipartition once
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
        double vol = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1u)
                vol += static_cast<double>(deg[v]);
        std::size_t cut = 0;
        for (const auto& e : g.edges())
            if (((mask >> e.tail) & 1u) != ((mask >> e.head) & 1u))
                ++cut;
        h = std::min(h, static_cast<double>(cut) / std::min(vol, vol_total - vol));
    }

    CheegerReport r;
    r.h = h;
    r.lambda2 = eigvals_sym(norm)[1];
    r.holds = 2.0 * h >= r.lambda2 - 1e-9 && r.lambda2 >= h * h / 2.0 - 1e-9;
    return r;
}

/// Nonzero entries of an ascending spectrum.
inline std::vector<double> nonzero_part(const std::vector<double>& eigenvalues, double tol)
{
    std::vector<double> out;
    for (double l : eigenvalues)
        if (std::abs(l) >= tol)
            out.push_back(l);
    return out;
}

/// Largest pairwise gap between two ascending multisets, or +inf when their
/// sizes differ.
inline double multiset_distance(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace graphsusy
