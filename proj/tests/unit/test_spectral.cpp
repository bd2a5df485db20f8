#include "support.hpp"

#include <Eigen/Dense>

#include "graphsusy/spectral.hpp"

using namespace graphsusy;
using testing::corpus;

namespace {

std::vector<double> eigen_values(const RealMatrix& m)
{
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    if (m.rows() == 0)
        return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

/// Chung's conductance by exhaustive subset search.
double cheeger_oracle(const OrientedGraph& g)
{
    const std::size_t n = g.vertex_count();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        double vol_in = 0, vol_out = 0, cut = 0;
        for (std::size_t v = 0; v < n; ++v)
            ((mask >> v) & 1u ? vol_in : vol_out) += static_cast<double>(g.degree(v));
        for (const auto& e : g.edges())
            if (((mask >> e.tail) & 1u) != ((mask >> e.head) & 1u))
                cut += 1;
        best = std::min(best, cut / std::min(vol_in, vol_out));
    }
    return best;
}

} // namespace

TEST_CASE("kernel bases")
{
    const auto tri = cycle_graph(3);
    const auto kb = kernel_basis(laplacian_even(tri).cast<double>());
    REQUIRE(kb.dim() == 1);
    for (double x : kb.vectors[0])
        CHECK(x == Catch::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    const auto odd = kernel_basis(laplacian_odd(tri).cast<double>());
    REQUIRE(odd.dim() == 1);
    for (double x : odd.vectors[0])
        CHECK(x == Catch::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    const auto two = kernel_basis(laplacian_even(disjoint_triangles()).cast<double>());
    REQUIRE(two.dim() == 2);
    // the kernel is spanned by the component indicators: projector check
    RealMatrix proj(6, 6);
    for (const auto& v : two.vectors)
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                proj(i, j) += v[i] * v[j];
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(proj(i, j) == Catch::Approx((i / 3 == j / 3) ? 1.0 / 3.0 : 0.0).margin(1e-12));

    const auto lap = laplacian_even(cycle_graph(6)).cast<double>();
    for (const auto& v : kernel_basis(lap).vectors)
        CHECK(vector_norm(lap * v) < kernel_basis(lap).tolerance);
}

TEST_CASE("ambiguous kernel threshold is reported")
{
    using V = std::vector<double>;
    CHECK(kernel_dimension(V{0.0, 1e-11, 1.0}, 1e-8) == 2);
    CHECK_THROWS_AS(kernel_dimension(V{0.0, 5e-9, 1.0}, 1e-8), Error);
    CHECK_THROWS_AS(kernel_dimension(V{0.0, 2e-8, 1.0}, 1e-8), Error);
    CHECK(kernel_dimension(V{0.0, 2e-6, 1.0}, 1e-8) == 1);
}

TEST_CASE("Betti numbers")
{
    CHECK(betti_numbers(cycle_graph(6)) == BettiNumbers{1, 1});
    CHECK(betti_numbers(disjoint_union(path_graph(3), disjoint_union(star_graph(2), empty_graph(1)))) ==
          BettiNumbers{3, 0});
    CHECK(betti_numbers(disjoint_triangles()) == BettiNumbers{2, 2});
    CHECK(betti_numbers(null_graph()) == BettiNumbers{0, 0});
}

TEST_CASE("Fiedler value")
{
    CHECK(fiedler_value(cycle_graph(6)) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(fiedler_value(disjoint_triangles()) == Catch::Approx(0.0).margin(1e-12));
    CHECK(fiedler_value(path_graph(2)) == Catch::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(fiedler_value(empty_graph(1)), Error);
}

TEST_CASE("Merris bound")
{
    const auto tri = merris_bound_check(cycle_graph(3));
    CHECK(tri.lambda_max == Catch::Approx(3.0));
    CHECK(tri.bound == Catch::Approx(4.0));
    CHECK(tri.holds);
    const auto p2 = merris_bound_check(path_graph(2));
    CHECK(p2.lambda_max == Catch::Approx(2.0));
    CHECK(p2.bound == Catch::Approx(2.0));
    CHECK(p2.holds);
    const auto star = merris_bound_check(star_graph(3));
    CHECK(star.lambda_max == Catch::Approx(4.0));
    CHECK(star.bound == Catch::Approx(4.0));
    CHECK(star.holds);
    CHECK_THROWS_AS(merris_bound_check(empty_graph(3)), Error);
}

TEST_CASE("Cheeger inequality")
{
    const auto c6 = cheeger_report(cycle_graph(6));
    CHECK(c6.h == Catch::Approx(1.0 / 3.0));
    CHECK(c6.lambda2 == Catch::Approx(1.0 - std::cos(2.0 * std::numbers::pi / 6.0)));
    CHECK(c6.holds);

    const auto p2 = cheeger_report(path_graph(2));
    CHECK(p2.h == Catch::Approx(1.0));
    CHECK(p2.lambda2 == Catch::Approx(2.0));
    CHECK(p2.holds);

    // triangle: every split cuts 2 edges against a smaller volume of 2
    const auto tri = cheeger_report(cycle_graph(3));
    CHECK(tri.h == Catch::Approx(cheeger_oracle(cycle_graph(3))));
    CHECK(tri.h == Catch::Approx(1.0));
    CHECK(tri.lambda2 == Catch::Approx(1.5));
    CHECK(2.0 * tri.h >= tri.lambda2);
    CHECK(tri.lambda2 >= tri.h * tri.h / 2.0);

    CHECK_THROWS_AS(cheeger_report(disjoint_triangles()), Error);
    CHECK_THROWS_AS(cheeger_report(cycle_graph(21)), Error);

    for (const auto& g : corpus(41, 60, 2, 10)) {
        if (!is_connected(g) || g.vertex_count() < 2)
            continue;
        const auto r = cheeger_report(g);
        CHECK(r.h == Catch::Approx(cheeger_oracle(g)).epsilon(1e-12));
        const auto ref = eigen_values(normalized_laplacian(g));
        CHECK(r.lambda2 == Catch::Approx(ref[1]).margin(1e-10));
        CHECK(r.holds);
    }
}

TEST_CASE("spectral identities on random graphs")
{
    std::mt19937_64 rng(42);
    for (const auto& g : corpus(43, 100)) {
        const auto even = eigvals_sym(laplacian_even(g).cast<double>());
        const auto odd = eigvals_sym(laplacian_odd(g).cast<double>());
        const auto ref = eigen_values(laplacian_even(g).cast<double>());
        for (std::size_t k = 0; k < even.size(); ++k)
            CHECK(std::abs(even[k] - ref[k]) < 1e-10);
        for (double l : even)
            CHECK(l >= -1e-10);
        for (double l : odd)
            CHECK(l >= -1e-10);

        const double tol = default_kernel_tolerance(even);
        CHECK(multiset_distance(nonzero_part(even, tol), nonzero_part(odd, tol)) < 1e-8 * std::max(1.0, even.back()));
        CHECK(kernel_dimension(even, tol) == component_count(g));
        CHECK(kernel_dimension(odd, default_kernel_tolerance(odd)) == cycle_rank(g));

        const auto flipped = random_orientation(g, rng);
        const auto odd2 = eigvals_sym(laplacian_odd(flipped).cast<double>());
        CHECK(multiset_distance(odd, odd2) < 1e-9);

        CHECK((fiedler_value(g) > 1e-8) == is_connected(g));
    }
}
