#pragma once

#include <cmath>
#include <vector>

#include "graphsusy/operators.hpp"
#include "graphsusy/spectral.hpp"

namespace graphsusy {

/// The Witten index computed four ways.
struct WittenReport {
    long long value = 0;
    long long euler = 0;       // |V| - |E|
    long long topological = 0; // #components - cycle rank
    long long kernel = 0;      // dim ker Δ+ - dim ker Δ-
    std::vector<double> betas;
    std::vector<double> trace_values; // Tr F e^{-βΔ_S} per β
    long long trace_rounded = 0;
    double beta_drift = 0.0; // max spread of trace_values
};

inline constexpr double witten_guard_band = 1e-6;

/// Tr F e^{-βΔ_S} = Σ_even e^{-βλ} - Σ_odd e^{-βλ}.
inline double supertrace_heat(const std::vector<double>& even, const std::vector<double>& odd, double beta)
{
    double s = 0.0;
    for (double l : even)
        s += std::exp(-beta * l);
    for (double l : odd)
        s -= std::exp(-beta * l);
    return s;
}

/// All routes must agree; the heat-kernel route is rounded only when within
/// the guard band of an integer.
inline WittenReport witten_index(const OrientedGraph& g, const std::vector<double>& betas = {0.5, 1.0, 2.0})
{
    if (betas.empty())
        throw Error(ErrorCode::InvalidArgument, "at least one β is required");
    WittenReport r;
    r.betas = betas;
    r.euler = euler_characteristic(g);
    r.topological = static_cast<long long>(component_count(g)) - static_cast<long long>(cycle_rank(g));

    const auto even = eigvals_sym(laplacian_even(g).cast<double>());
    const auto odd = eigvals_sym(laplacian_odd(g).cast<double>());
    std::vector<double> all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    const double tol = default_kernel_tolerance(all);
    r.kernel = static_cast<long long>(kernel_dimension(even, tol)) - static_cast<long long>(kernel_dimension(odd, tol));

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double beta : betas) {
        const double tr = supertrace_heat(even, odd, beta);
        r.trace_values.push_back(tr);
        lo = std::min(lo, tr);
        hi = std::max(hi, tr);
    }
    r.beta_drift = hi - lo;
    for (double tr : r.trace_values) {
        const double rounded = std::round(tr);
        if (std::abs(tr - rounded) > witten_guard_band)
            throw Error(ErrorCode::RouteDisagreement,
                        "supertrace " + std::to_string(tr) + " is not within the guard band of an integer");
        if (static_cast<long long>(rounded) != static_cast<long long>(std::round(r.trace_values.front())))
            throw Error(ErrorCode::RouteDisagreement, "supertrace depends on β");
    }
    r.trace_rounded = static_cast<long long>(std::round(r.trace_values.front()));

    if (r.euler != r.topological || r.euler != r.kernel || r.euler != r.trace_rounded)
        throw Error(ErrorCode::RouteDisagreement,
                    "Witten index routes disagree: " + std::to_string(r.euler) + ", " + std::to_string(r.topological) +
                        ", " + std::to_string(r.kernel) + ", " + std::to_string(r.trace_rounded));
    r.value = r.euler;
    return r;
}

struct VacuumReport {
    std::size_t n_bosonic_zero = 0;   // dim ker Δ+
    std::size_t n_fermionic_zero = 0; // dim ker Δ-
    long long witten_index = 0;
    bool broken = false;
    bool purely_bosonic() const noexcept { return n_bosonic_zero > 0 && n_fermionic_zero == 0; }
    bool purely_fermionic() const noexcept { return n_fermionic_zero > 0 && n_bosonic_zero == 0; }
};

inline VacuumReport vacuum_classification(const OrientedGraph& g)
{
    const auto b = betti_numbers(g);
    VacuumReport r;
    r.n_bosonic_zero = b.b0;
    r.n_fermionic_zero = b.b1;
    r.witten_index = static_cast<long long>(b.b0) - static_cast<long long>(b.b1);
    r.broken = b.b0 == 0 && b.b1 == 0;
    if (r.purely_fermionic())
        throw Error(ErrorCode::RouteDisagreement, "fermionic vacuum without a bosonic one");
    return r;
}

/// No zero-energy state in either sector.
inline bool is_susy_broken(const OrientedGraph& g)
{
    return vacuum_classification(g).broken;
}

struct DegeneracyGroup {
    double eigenvalue = 0.0;
    std::size_t even_multiplicity = 0;
    std::size_t odd_multiplicity = 0;
};

struct DegeneracyReport {
    std::vector<DegeneracyGroup> groups; // nonzero levels, ascending
    double tolerance = 0.0;
    bool paired = true; // every group has equal sector multiplicities
};

/// Nonzero levels of Δ_S grouped by value with their even/odd multiplicities.
inline DegeneracyReport degeneracy_report(const OrientedGraph& g)
{
    const auto even = eigvals_sym(laplacian_even(g).cast<double>());
    const auto odd = eigvals_sym(laplacian_odd(g).cast<double>());
    std::vector<std::pair<double, bool>> levels; // (λ, is_odd)
    for (double l : even)
        levels.emplace_back(l, false);
    for (double l : odd)
        levels.emplace_back(l, true);
    std::sort(levels.begin(), levels.end());

    std::vector<double> all;
    for (const auto& [l, o] : levels)
        all.push_back(l);
    DegeneracyReport r;
    r.tolerance = default_kernel_tolerance(all);
    kernel_dimension(all, r.tolerance); // raises on an ambiguous zero level

    for (std::size_t i = 0; i < levels.size();) {
        if (levels[i].first < r.tolerance) {
            ++i;
            continue;
        }
        std::size_t k = i + 1;
        while (k < levels.size() && levels[k].first - levels[k - 1].first < r.tolerance)
            ++k;
        if (levels[k - 1].first - levels[i].first >= r.tolerance)
            throw Error(ErrorCode::GroupingAmbiguity, "eigenvalue cluster near " + std::to_string(levels[i].first) +
                                                          " is wider than the pairing tolerance");
        if (k < levels.size() && levels[k].first - levels[k - 1].first < ambiguity_band * r.tolerance)
            throw Error(ErrorCode::GroupingAmbiguity,
                        "eigenvalues near " + std::to_string(levels[i].first) + " are too close to separate");
        DegeneracyGroup grp;
        double sum = 0.0;
        for (std::size_t q = i; q < k; ++q) {
            (levels[q].second ? grp.odd_multiplicity : grp.even_multiplicity) += 1;
            sum += levels[q].first;
        }
        const auto count = k - i;
        grp.eigenvalue = sum / static_cast<double>(count);
        r.paired = r.paired && grp.even_multiplicity == grp.odd_multiplicity;
        r.groups.push_back(grp);
        i = k;
    }
    return r;
}

/// For each nonzero even eigenpair (λ, v): ‖Δ-(Iᵀv) - λIᵀv‖ and ‖Iᵀv‖.
/// The intertwiner Iᵀ carries the even eigenspace to the odd one.
struct IntertwinerCheck {
    double max_residual = 0.0;
    double min_image_norm = std::numeric_limits<double>::infinity();
    std::size_t pairs_checked = 0;
};

inline IntertwinerCheck intertwiner_check(const OrientedGraph& g)
{
    const auto inc = incidence_matrix(g).cast<double>();
    const auto inc_t = inc.transpose();
    const auto odd = laplacian_odd(g).cast<double>();
    const auto spec = eig_sym(laplacian_even(g).cast<double>());
    const double tol = default_kernel_tolerance(spec.eigenvalues);
    IntertwinerCheck c;
    for (std::size_t k = 0; k < spec.dim(); ++k) {
        const double lambda = spec.eigenvalues[k];
        if (lambda < tol)
            continue;
        const auto v = spec.vector(k);
        const auto w = inc_t * v;
        const auto dw = odd * w;
        double res = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i)
            res += (dw[i] - lambda * w[i]) * (dw[i] - lambda * w[i]);
        c.max_residual = std::max(c.max_residual, std::sqrt(res));
        c.min_image_norm = std::min(c.min_image_norm, vector_norm(w));
        ++c.pairs_checked;
    }
    return c;
}

} // namespace graphsusy
