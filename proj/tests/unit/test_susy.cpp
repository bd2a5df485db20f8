#include "support.hpp"

#include "graphsusy/susy.hpp"

using namespace graphsusy;
using testing::corpus;

TEST_CASE("Witten index examples")
{
    const auto c6 = witten_index(cycle_graph(6));
    CHECK(c6.value == 0);
    CHECK(c6.euler == 0);
    CHECK(c6.topological == 0);
    CHECK(c6.kernel == 0);
    CHECK(c6.trace_rounded == 0);
    CHECK(c6.beta_drift < 1e-8);

    CHECK(witten_index(path_graph(2)).value == 1);
    CHECK(witten_index(disjoint_triangles()).value == 0);
    CHECK(witten_index(empty_graph(4)).value == 4);
    CHECK(witten_index(null_graph()).value == 0);
    CHECK(witten_index(complete_graph(5)).value == -5);
    CHECK_THROWS_AS(witten_index(path_graph(2), {}), Error);
}

TEST_CASE("Witten index routes agree on random graphs")
{
    for (const auto& g : corpus(81, 60, 1, 12)) {
        const auto r = witten_index(g, {0.25, 1.0, 4.0});
        CHECK(r.value == static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()));
        CHECK(r.beta_drift < 1e-8);
        for (double tr : r.trace_values)
            CHECK(std::abs(tr - static_cast<double>(r.value)) < 1e-8);
    }
}

TEST_CASE("supersymmetry breaking")
{
    CHECK(is_susy_broken(null_graph()));
    CHECK_FALSE(is_susy_broken(empty_graph(1)));
    CHECK_FALSE(is_susy_broken(cycle_graph(6)));
    for (const auto& g : corpus(82, 40, 1, 10))
        CHECK_FALSE(is_susy_broken(g));
}

TEST_CASE("vacuum classification")
{
    const auto path = vacuum_classification(path_graph(5));
    CHECK(path.n_bosonic_zero == 1);
    CHECK(path.n_fermionic_zero == 0);
    CHECK(path.purely_bosonic());

    const auto c6 = vacuum_classification(cycle_graph(6));
    CHECK(c6.n_bosonic_zero == 1);
    CHECK(c6.n_fermionic_zero == 1);
    CHECK(c6.witten_index == 0);

    const auto two = vacuum_classification(disjoint_triangles());
    CHECK(two.n_bosonic_zero == 2);
    CHECK(two.n_fermionic_zero == 2);

    const auto none = vacuum_classification(null_graph());
    CHECK(none.broken);
}

TEST_CASE("degeneracy pairing")
{
    const auto tri = degeneracy_report(cycle_graph(3));
    REQUIRE(tri.groups.size() == 1);
    CHECK(tri.groups[0].eigenvalue == Catch::Approx(3.0));
    CHECK(tri.groups[0].even_multiplicity == 2);
    CHECK(tri.groups[0].odd_multiplicity == 2);
    CHECK(tri.paired);

    const auto p2 = degeneracy_report(path_graph(2));
    REQUIRE(p2.groups.size() == 1);
    CHECK(p2.groups[0].eigenvalue == Catch::Approx(2.0));
    CHECK(p2.groups[0].even_multiplicity == 1);
    CHECK(p2.groups[0].odd_multiplicity == 1);

    CHECK(degeneracy_report(empty_graph(3)).groups.empty());

    for (const auto& g : corpus(83, 40, 2, 10)) {
        const auto r = degeneracy_report(g);
        CHECK(r.paired);
        std::size_t even_nonzero = 0;
        for (const auto& grp : r.groups)
            even_nonzero += grp.even_multiplicity;
        // rank of Δ+ is |V| - b0
        CHECK(even_nonzero == g.vertex_count() - component_count(g));
    }
}

TEST_CASE("incidence transpose intertwines the sectors")
{
    for (const auto& g : corpus(84, 40, 2, 12)) {
        const auto c = intertwiner_check(g);
        CHECK(c.max_residual < 1e-8);
        if (c.pairs_checked > 0)
            CHECK(c.min_image_norm > 1e-6);
        CHECK(c.pairs_checked == g.vertex_count() - component_count(g));
    }
}
