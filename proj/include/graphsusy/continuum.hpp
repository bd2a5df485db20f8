#pragma once

// Cycle graphs C_n with uniform edge length h = 2π/n. The metric Laplacian
// Δ+/h² has mode-k eigenvalue (n/π)² sin²(kπ/n) → k², the free particle on
// the unit circle. Only Δ+ is rescaled; Δ- is compared unscaled.

#include <cmath>
#include <numbers>
#include <vector>

#include "graphsusy/generators.hpp"
#include "graphsusy/operators.hpp"
#include "graphsusy/spectral.hpp"

namespace graphsusy {

inline void require_cycle_length(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "cycle graphs need n >= 3");
}

/// {4 sin²(kπ/n) : k = 0..n-1}, ascending.
inline std::vector<double> cycle_spectrum_exact(std::size_t n)
{
    require_cycle_length(n);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
        out[k] = 4.0 * s * s;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Mode-k eigenvalue of Δ+/h², h = 2π/n.
inline double scaled_mode(std::size_t n, std::size_t k)
{
    const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
    const double r = static_cast<double>(n) / std::numbers::pi;
    return r * r * s * s;
}

/// (n/π)² sin²(kπ/n) for k = 0..n-1 (mode order, unsorted).
inline std::vector<double> scaled_spectrum(std::size_t n)
{
    require_cycle_length(n);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = scaled_mode(n, k);
    return out;
}

struct ConvergenceRow {
    std::size_t n = 0;
    std::size_t k = 0;
    double scaled_eigenvalue = 0.0; // from the numerical spectrum
    double closed_form = 0.0;
    double target = 0.0; // k²
    double relative_error = 0.0;
    double taylor_bound = 0.0; // (kπ/n)²/3, relative
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows; // ordered by (n, k)
    bool monotone = true;             // error nonincreasing in n for each k
    bool odd_matches_even = true;     // nonzero spectra of Δ± coincide at every n
    double max_closed_form_gap = 0.0; // max |numerical - 4 sin²| over all n
    double max_odd_even_gap = 0.0;
};

/// Numerical spectra of C_n against the continuum modes k = 0..k_max.
inline ConvergenceStudy convergence_study(std::vector<std::size_t> n_list, std::size_t k_max,
                                          bool check_odd_sector = true)
{
    std::sort(n_list.begin(), n_list.end());
    for (std::size_t n : n_list) {
        require_cycle_length(n);
        if (2 * k_max > n)
            throw Error(ErrorCode::InvalidArgument, "mode count must satisfy k_max <= n/2");
    }
    ConvergenceStudy st;
    std::vector<double> last_error(k_max + 1, std::numeric_limits<double>::infinity());
    for (std::size_t n : n_list) {
        const auto g = cycle_graph(n);
        const auto even = eigvals_sym(laplacian_even(g).cast<double>());
        const auto exact = cycle_spectrum_exact(n);
        st.max_closed_form_gap = std::max(st.max_closed_form_gap, multiset_distance(even, exact));

        if (check_odd_sector) {
            const auto odd = eigvals_sym(laplacian_odd(g).cast<double>());
            const double tol = default_kernel_tolerance(even);
            const double gap = multiset_distance(nonzero_part(even, tol), nonzero_part(odd, tol));
            st.max_odd_even_gap = std::max(st.max_odd_even_gap, gap);
            st.odd_matches_even = st.odd_matches_even && gap < 1e-8 * std::max(1.0, even.back());
        }

        const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
        for (std::size_t k = 0; k <= k_max; ++k) {
            ConvergenceRow row;
            row.n = n;
            row.k = k;
            // modes 0 < k < n/2 are doubly degenerate at sorted positions 2k-1, 2k;
            // k = 0 and k = n/2 are simple
            const double lambda = (k == 0 || 2 * k == n) ? even[k == 0 ? 0 : n - 1]
                                                         : 0.5 * (even[2 * k - 1] + even[2 * k]);
            row.scaled_eigenvalue = lambda / (h * h);
            row.closed_form = scaled_mode(n, k);
            row.target = static_cast<double>(k * k);
            row.relative_error = std::abs(row.scaled_eigenvalue - row.target) / std::max(row.target, 1.0);
            const double x = static_cast<double>(k) * std::numbers::pi / static_cast<double>(n);
            row.taylor_bound = x * x / 3.0;
            if (k > 0 && row.relative_error > last_error[k])
                st.monotone = false;
            last_error[k] = row.relative_error;
            st.rows.push_back(row);
        }
    }
    return st;
}

} // namespace graphsusy
