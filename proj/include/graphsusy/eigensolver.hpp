#pragma once

// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by the implicit-shift QL iteration (EISPACK tred2/tql2 lineage).
// Work arrays are column-major so that every inner loop is unit stride.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "graphsusy/matrix.hpp"

namespace graphsusy {

/// Full eigendecomposition of a real symmetric matrix.
/// Eigenvalues ascend; column k of `eigenvectors` belongs to eigenvalue k.
struct Spectrum {
    std::vector<double> eigenvalues;
    RealMatrix eigenvectors;

    std::size_t dim() const noexcept { return eigenvalues.size(); }

    std::vector<double> vector(std::size_t k) const
    {
        std::vector<double> v(eigenvectors.rows());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = eigenvectors(i, k);
        return v;
    }

    double max_abs_eigenvalue() const
    {
        double r = 0.0;
        for (double l : eigenvalues)
            r = std::max(r, std::abs(l));
        return r;
    }
};

struct EigenOptions {
    double symmetry_tolerance = 1e-10;
    int max_iterations_per_eigenvalue = 60;
};

namespace detail {

// Column-major n x n workspace.
class ColMajor {
public:
    explicit ColMajor(std::size_t n)
        : n_(n)
        , a_(n * n, 0.0)
    {
    }
    double& operator()(std::size_t r, std::size_t c) { return a_[c * n_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[c * n_ + r]; }
    double* column(std::size_t c) { return a_.data() + c * n_; }

private:
    std::size_t n_;
    std::vector<double> a_;
};

// Householder tridiagonalisation. On return d holds the diagonal, e the
// subdiagonal in e[1..n-1]; V holds the orthogonal transform when
// accumulate is set.
inline void householder_tridiagonalize(ColMajor& V, std::vector<double>& d, std::vector<double>& e,
                                       std::size_t n, bool accumulate)
{
    for (std::size_t j = 0; j < n; ++j)
        d[j] = V(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k)
            scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
                V(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0)
                g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j)
                e[j] = 0.0;

            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                V(j, i) = f;
                double* colj = V.column(j);
                g = e[j] + colj[j] * f;
                for (std::size_t k = j + 1; k < i; ++k) {
                    g += colj[k] * d[k];
                    e[k] += colj[k] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j)
                e[j] -= hh * d[j];
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                double* colj = V.column(j);
                for (std::size_t k = j; k < i; ++k)
                    colj[k] -= (f * e[k] + g * d[k]);
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    if (!accumulate) {
        for (std::size_t j = 0; j < n; ++j)
            d[j] = V(j, j);
        e[0] = 0.0;
        return;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        V(n - 1, i) = V(i, i);
        V(i, i) = 1.0;
        const double h = d[i + 1];
        double* coli1 = V.column(i + 1);
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k)
                d[k] = coli1[k] / h;
            for (std::size_t j = 0; j <= i; ++j) {
                double* colj = V.column(j);
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k)
                    g += coli1[k] * colj[k];
                for (std::size_t k = 0; k <= i; ++k)
                    colj[k] -= g * d[k];
            }
        }
        for (std::size_t k = 0; k <= i; ++k)
            coli1[k] = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = V(n - 1, j);
        V(n - 1, j) = 0.0;
    }
    V(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e). Rotations are applied to V
// when vectors is set.
inline void tridiagonal_ql(ColMajor& V, std::vector<double>& d, std::vector<double>& e, std::size_t n,
                           bool vectors, int max_iterations)
{
    for (std::size_t i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1)
                break;
            ++m;
        }
        if (m == n)
            m = n - 1;

        if (m > l) {
            int iter = 0;
            do {
                if (++iter > max_iterations)
                    throw Error(ErrorCode::NoConvergence, "QL iteration did not converge");
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0)
                    r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i)
                    d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    if (vectors) {
                        double* ci = V.column(ii);
                        double* ci1 = V.column(ii + 1);
                        for (std::size_t k = 0; k < n; ++k) {
                            const double t = ci1[k];
                            ci1[k] = s * ci[k] + c * t;
                            ci[k] = c * ci[k] - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

inline void require_symmetric(const RealMatrix& m, double tol)
{
    if (!m.square())
        throw Error(ErrorCode::NotSymmetric, "matrix is not square");
    const double scale = std::max(1.0, max_abs(m));
    if (!is_symmetric(m, tol * scale))
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric within tolerance");
}

inline ColMajor load(const RealMatrix& m)
{
    const std::size_t n = m.rows();
    ColMajor V(n);
    // symmetrise so the reduction sees an exactly symmetric input
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            V(r, c) = 0.5 * (m(r, c) + m(c, r));
    return V;
}

} // namespace detail

/// Eigenvalues only, ascending. Skips all eigenvector work.
inline std::vector<double> eigvals_sym(const RealMatrix& m, const EigenOptions& opts = {})
{
    detail::require_symmetric(m, opts.symmetry_tolerance);
    const std::size_t n = m.rows();
    if (n == 0)
        return {};
    auto V = detail::load(m);
    std::vector<double> d(n), e(n);
    detail::householder_tridiagonalize(V, d, e, n, false);
    detail::tridiagonal_ql(V, d, e, n, false, opts.max_iterations_per_eigenvalue);
    std::sort(d.begin(), d.end());
    return d;
}

/// Full eigendecomposition. Each eigenvector's largest-magnitude component
/// (first one on ties) is made positive.
inline Spectrum eig_sym(const RealMatrix& m, const EigenOptions& opts = {})
{
    detail::require_symmetric(m, opts.symmetry_tolerance);
    const std::size_t n = m.rows();
    Spectrum out;
    if (n == 0)
        return out;
    auto V = detail::load(m);
    std::vector<double> d(n), e(n);
    detail::householder_tridiagonalize(V, d, e, n, true);
    detail::tridiagonal_ql(V, d, e, n, true, opts.max_iterations_per_eigenvalue);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    out.eigenvalues.resize(n);
    out.eigenvectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = d[src];
        const double* col = V.column(src);
        std::size_t pivot = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(col[i]) > std::abs(col[pivot]) + 1e-12)
                pivot = i;
        const double sign = col[pivot] < 0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, k) = sign * col[i];
    }
    return out;
}

/// f(M) = V f(Λ) Vᵀ for a symmetric M given its spectrum.
inline RealMatrix matrix_function(const Spectrum& s, const std::function<double(double)>& f)
{
    const std::size_t n = s.dim();
    RealMatrix out(n, n);
    std::vector<double> fl(n);
    for (std::size_t k = 0; k < n; ++k)
        fl[k] = f(s.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += s.eigenvectors(i, k) * fl[k] * s.eigenvectors(j, k);
            out(i, j) = acc;
            out(j, i) = acc;
        }
    }
    return out;
}

/// max |M - V Λ Vᵀ|.
inline double reconstruction_error(const RealMatrix& m, const Spectrum& s)
{
    return max_abs_diff(m, matrix_function(s, [](double x) { return x; }));
}

/// max |Vᵀ V - 1|.
inline double orthonormality_error(const Spectrum& s)
{
    const std::size_t n = s.dim();
    double err = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dot += s.eigenvectors(i, a) * s.eigenvectors(i, b);
            err = std::max(err, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    }
    return err;
}

} // namespace graphsusy
