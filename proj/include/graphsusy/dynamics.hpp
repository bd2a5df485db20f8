#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "graphsusy/operators.hpp"
#include "graphsusy/spectral.hpp"

namespace graphsusy {

using Amplitude = std::complex<double>;

/// Amplitudes over vertices, edges, or both (vertices first, then edges).
struct QuantumState {
    Sector sector = Sector::Vertex;
    std::vector<Amplitude> amplitudes;
    /// Index of the first edge amplitude for mixed states; 0 otherwise.
    std::size_t split = 0;

    double norm() const
    {
        double s = 0.0;
        for (const auto& a : amplitudes)
            s += std::norm(a);
        return std::sqrt(s);
    }
};

inline std::size_t sector_dimension(const OrientedGraph& g, Sector s)
{
    switch (s) {
    case Sector::Vertex: return g.vertex_count();
    case Sector::Edge: return g.edge_count();
    case Sector::Mixed: return g.simplex_count();
    }
    return 0;
}

inline QuantumState make_state(const OrientedGraph& g, Sector s, std::vector<Amplitude> amps)
{
    QuantumState st{s, std::move(amps), s == Sector::Mixed ? g.vertex_count() : 0};
    if (st.amplitudes.size() != sector_dimension(g, s))
        throw Error(ErrorCode::DimensionMismatch, "state length " + std::to_string(st.amplitudes.size()) +
                                                      " does not match " + std::string(to_string(s)) +
                                                      " sector dimension " +
                                                      std::to_string(sector_dimension(g, s)));
    for (const auto& a : st.amplitudes)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error(ErrorCode::InvalidArgument, "state has a non-finite amplitude");
    return st;
}

inline void check_state(const OrientedGraph& g, const QuantumState& st)
{
    if (st.amplitudes.size() != sector_dimension(g, st.sector))
        throw Error(ErrorCode::DimensionMismatch, "state does not fit the graph's " +
                                                      std::string(to_string(st.sector)) + " sector");
    if (st.sector == Sector::Mixed && st.split != g.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "mixed state split does not equal |V|");
}

namespace detail {

inline std::vector<Amplitude> apply(const RealMatrix& m, const std::vector<Amplitude>& x)
{
    std::vector<Amplitude> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Amplitude acc{};
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

} // namespace detail

/// e^{iΔt}·state with Δ the sector Laplacian (Δ+, Δ-, or Δ_S); ħ = 1, 2m = 1.
inline QuantumState evolve(const QuantumState& state, double t, const OrientedGraph& g)
{
    check_state(g, state);
    const auto spec = eig_sym(sector_laplacian(g, state.sector));
    const std::size_t n = spec.dim();
    // coefficients in the eigenbasis, phase, back
    std::vector<Amplitude> coef(n);
    for (std::size_t k = 0; k < n; ++k) {
        Amplitude c{};
        for (std::size_t i = 0; i < n; ++i)
            c += spec.eigenvectors(i, k) * state.amplitudes[i];
        coef[k] = c * std::polar(1.0, spec.eigenvalues[k] * t);
    }
    QuantumState out = state;
    for (std::size_t i = 0; i < n; ++i) {
        Amplitude acc{};
        for (std::size_t k = 0; k < n; ++k)
            acc += spec.eigenvectors(i, k) * coef[k];
        out.amplitudes[i] = acc;
    }
    return out;
}

/// Steady iff ‖Δ·state‖ < tol·‖state‖.
inline bool is_steady(const QuantumState& state, const OrientedGraph& g, double tol = 1e-9)
{
    check_state(g, state);
    const double nrm = state.norm();
    if (nrm == 0.0)
        throw Error(ErrorCode::ZeroState, "the zero vector is not a physical state");
    const auto y = detail::apply(sector_laplacian(g, state.sector), state.amplitudes);
    double s = 0.0;
    for (const auto& a : y)
        s += std::norm(a);
    return std::sqrt(s) < tol * nrm;
}

/// Orthonormal basis of steady states of a sector.
inline KernelBasis steady_states(const OrientedGraph& g, Sector s, std::optional<double> tol = std::nullopt)
{
    return kernel_basis(sector_laplacian(g, s), tol);
}

enum class PropagatorConvention {
    Psd,  ///< e^{-tΔ+}, Δ+ = D - A
    Walk, ///< e^{t(A-D)}
};

/// Euclidean vertex propagator. Both conventions name the same matrix; each
/// is computed from its own generator.
inline RealMatrix euclidean_propagator(const OrientedGraph& g, double t, PropagatorConvention c)
{
    if (c == PropagatorConvention::Psd) {
        const auto spec = eig_sym(laplacian_even(g).cast<double>());
        return matrix_function(spec, [t](double l) { return std::exp(-t * l); });
    }
    const auto gen = (adjacency_matrix(g) - degree_matrix(g)).cast<double>();
    const auto spec = eig_sym(gen);
    return matrix_function(spec, [t](double l) { return std::exp(t * l); });
}

} // namespace graphsusy
