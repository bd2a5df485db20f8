#pragma once

// Operators of the vertex (bosonic) / edge (fermionic) Hilbert space.
// Combined index layout everywhere: vertices 0..|V|-1 then edges
// |V|..|V|+|E|-1.

#include <cmath>
#include <utility>

#include "graphsusy/eigensolver.hpp"
#include "graphsusy/graph.hpp"

namespace graphsusy {

enum class Sector { Vertex, Edge, Mixed };
enum class Parity { Even, Odd };

constexpr std::string_view to_string(Sector s) noexcept
{
    switch (s) {
    case Sector::Vertex: return "vertex";
    case Sector::Edge: return "edge";
    case Sector::Mixed: return "mixed";
    }
    return "?";
}

/// Operator on the vertex ⊕ edge space with its 2x2 block layout explicit.
/// For Q2 the stored pattern P carries an implicit factor i on the
/// off-diagonal blocks (`imaginary` set): the operator is i·P.
template <typename T>
struct BlockOperator {
    std::size_t vertex_dim = 0;
    std::size_t edge_dim = 0;
    Matrix<T> matrix;
    bool imaginary = false;

    std::size_t dim() const noexcept { return vertex_dim + edge_dim; }
    Sector sector_of(std::size_t index) const noexcept { return index < vertex_dim ? Sector::Vertex : Sector::Edge; }

    Matrix<T> block(std::size_t r0, std::size_t rn, std::size_t c0, std::size_t cn) const
    {
        Matrix<T> out(rn, cn);
        for (std::size_t i = 0; i < rn; ++i)
            for (std::size_t j = 0; j < cn; ++j)
                out(i, j) = matrix(r0 + i, c0 + j);
        return out;
    }
    Matrix<T> vertex_block() const { return block(0, vertex_dim, 0, vertex_dim); }
    Matrix<T> edge_block() const { return block(vertex_dim, edge_dim, vertex_dim, edge_dim); }
    /// rows: vertices, cols: edges
    Matrix<T> upper_block() const { return block(0, vertex_dim, vertex_dim, edge_dim); }
    /// rows: edges, cols: vertices
    Matrix<T> lower_block() const { return block(vertex_dim, edge_dim, 0, vertex_dim); }
};

using IntBlockOperator = BlockOperator<std::int64_t>;

/// Δ+ = I Iᵀ (= D - A).
inline IntMatrix laplacian_even(const OrientedGraph& g)
{
    const auto inc = incidence_matrix(g);
    return inc * inc.transpose();
}

/// Δ- = Iᵀ I. Orientation dependent off the diagonal.
inline IntMatrix laplacian_odd(const OrientedGraph& g)
{
    const auto inc = incidence_matrix(g);
    return inc.transpose() * inc;
}

/// Δ_S = Δ+ ⊕ Δ-.
inline IntBlockOperator laplacian_susy(const OrientedGraph& g)
{
    return {g.vertex_count(), g.edge_count(), direct_sum(laplacian_even(g), laplacian_odd(g))};
}

namespace detail {

inline IntMatrix antidiagonal(const IntMatrix& upper, const IntMatrix& lower)
{
    const std::size_t m = upper.rows();
    const std::size_t n = upper.cols();
    IntMatrix out(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, m + j) = upper(i, j);
            out(m + j, i) = lower(j, i);
        }
    return out;
}

} // namespace detail

/// Incidence Dirac operator [[0, I], [Iᵀ, 0]]; squares to Δ_S.
inline IntBlockOperator dirac_incidence(const OrientedGraph& g)
{
    const auto inc = incidence_matrix(g);
    return {g.vertex_count(), g.edge_count(), detail::antidiagonal(inc, inc.transpose())};
}

/// F = +1 on vertices, -1 on edges.
inline IntBlockOperator fermion_parity(const OrientedGraph& g)
{
    IntBlockOperator f{g.vertex_count(), g.edge_count(), IntMatrix(g.simplex_count(), g.simplex_count())};
    for (std::size_t i = 0; i < g.simplex_count(); ++i)
        f.matrix(i, i) = i < g.vertex_count() ? 1 : -1;
    return f;
}

struct Supercharges {
    IntBlockOperator q1; // [[0, I], [Iᵀ, 0]]
    IntBlockOperator q2; // i·[[0, I], [-Iᵀ, 0]]
};

inline Supercharges supercharges(const OrientedGraph& g)
{
    const auto inc = incidence_matrix(g);
    Supercharges q;
    q.q1 = {g.vertex_count(), g.edge_count(), detail::antidiagonal(inc, inc.transpose())};
    q.q2 = {g.vertex_count(), g.edge_count(), detail::antidiagonal(inc, -inc.transpose()), true};
    return q;
}

/// Square of a block operator. For an imaginary pattern P, (iP)² = -P².
inline IntMatrix square(const IntBlockOperator& op)
{
    auto sq = op.matrix * op.matrix;
    if (op.imaginary)
        sq = -sq;
    return sq;
}

/// Sector Laplacian as a real matrix: Δ+ (vertex), Δ- (edge), Δ_S (mixed).
inline RealMatrix sector_laplacian(const OrientedGraph& g, Sector s)
{
    switch (s) {
    case Sector::Vertex: return laplacian_even(g).cast<double>();
    case Sector::Edge: return laplacian_odd(g).cast<double>();
    case Sector::Mixed: return laplacian_susy(g).matrix.cast<double>();
    }
    return {};
}

/// Positive square root of Δ± through its eigendecomposition.
inline RealMatrix dirac_sector(const OrientedGraph& g, Parity p)
{
    const auto lap = sector_laplacian(g, p == Parity::Even ? Sector::Vertex : Sector::Edge);
    const auto spec = eig_sym(lap);
    return matrix_function(spec, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

} // namespace graphsusy
