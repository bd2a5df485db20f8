#include "support.hpp"

#include "graphsusy/rewiring.hpp"

using namespace graphsusy;
using testing::corpus;

namespace {

bool is_path_graph(const OrientedGraph& g)
{
    if (!is_connected(g) || g.edge_count() + 1 != g.vertex_count())
        return false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

// Independent legality oracle: the edge set after the move stays simple.
bool legal_by_brute_force(const OrientedGraph& g, const RewiringMove& m)
{
    const auto& ed = g.edge(m.edge);
    const std::size_t fixed = m.endpoint == Endpoint::Tail ? ed.head : ed.tail;
    if (m.vertex == fixed)
        return m.orientation_only && m.endpoint == Endpoint::Tail;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (e == m.edge)
            continue;
        const auto& o = g.edge(e);
        if ((o.tail == fixed && o.head == m.vertex) || (o.head == fixed && o.tail == m.vertex))
            return false;
    }
    return m.vertex != (m.endpoint == Endpoint::Tail ? ed.tail : ed.head);
}

} // namespace

TEST_CASE("move enumeration")
{
    const auto p2 = enumerate_moves(path_graph(2));
    CHECK(structural_move_count(p2) == 0);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].orientation_only);

    for (std::size_t n : {3u, 4u, 5u}) {
        const auto moves = enumerate_moves(complete_graph(n));
        CHECK(structural_move_count(moves) == 0);
        CHECK(moves.size() == n * (n - 1) / 2);
    }

    const auto g = triangle_with_isolated_vertex();
    const auto moves = enumerate_moves(g);
    CHECK(std::find(moves.begin(), moves.end(), RewiringMove{0, Endpoint::Head, 3, false}) != moves.end());

    // every slot accounted for: legal iff listed
    for (const auto& h : corpus(91, 30, 2, 7)) {
        const auto listed = enumerate_moves(h);
        for (std::size_t i = 1; i < listed.size(); ++i) {
            const auto key = [](const RewiringMove& m) { return std::tuple(m.edge, m.endpoint, m.vertex); };
            CHECK(key(listed[i - 1]) < key(listed[i]));
        }
        std::size_t legal = 0;
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            for (Endpoint ep : {Endpoint::Tail, Endpoint::Head})
                for (std::size_t w = 0; w < h.vertex_count(); ++w) {
                    const bool flip = ep == Endpoint::Tail && w == h.edge(e).head;
                    const RewiringMove m{e, ep, w, flip};
                    if (legal_by_brute_force(h, m)) {
                        ++legal;
                        CHECK(std::find(listed.begin(), listed.end(), m) != listed.end());
                    }
                }
        CHECK(legal == listed.size());
    }
}

TEST_CASE("triangle with an isolated vertex opens into a path")
{
    const auto g = triangle_with_isolated_vertex();
    const RewiringMove m{2, Endpoint::Tail, 3, false};
    const auto after = apply_move(g, m);
    CHECK(is_path_graph(after));
    const auto d = component_cycle_delta(g, m);
    CHECK(d.components == -1);
    CHECK(d.cycles == -1);
    CHECK(witten_index(after).value == 1);
}

TEST_CASE("connecting two triangles")
{
    const auto g = disjoint_triangles();
    const RewiringMove m{0, Endpoint::Head, 3, false};
    const auto after = apply_move(g, m);
    const auto d = component_cycle_delta(g, m);
    CHECK(d.components == -1);
    CHECK(d.cycles == -1);
    CHECK(is_connected(after));
    CHECK(cycle_rank(after) == 1);
}

TEST_CASE("cutting a bottleneck")
{
    const auto g = bottleneck_graph();
    const RewiringMove m{2, Endpoint::Head, 0, false};
    const auto d = component_cycle_delta(g, m);
    CHECK(d.components == 1);
    CHECK(d.cycles == 1);
    const auto after = apply_move(g, m);
    CHECK(after.degree(4) == 0);
}

TEST_CASE("orientation flip")
{
    const auto g = cycle_graph(4);
    const auto m = flip_move(g, 1);
    const auto after = apply_move(g, m);
    CHECK(after.edge(1).tail == g.edge(1).head);
    CHECK(after.edge(1).head == g.edge(1).tail);
    const auto d = component_cycle_delta(g, m);
    CHECK(d.components == 0);
    CHECK(d.cycles == 0);
}

TEST_CASE("illegal moves")
{
    const auto g = cycle_graph(4);
    const auto code = [&](const RewiringMove& m) {
        try {
            apply_move(g, m);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::MalformedInput;
    };
    CHECK(code({0, Endpoint::Head, 1, false}) == ErrorCode::IllegalMove); // unchanged
    CHECK(code({0, Endpoint::Head, 0, false}) == ErrorCode::IllegalMove); // loop
    CHECK(code({0, Endpoint::Head, 3, false}) == ErrorCode::IllegalMove); // parallel to e4
    CHECK(code({0, Endpoint::Head, 9, false}) == ErrorCode::IllegalMove);
    CHECK(code({7, Endpoint::Head, 1, false}) == ErrorCode::IllegalMove);
    CHECK(code({0, Endpoint::Tail, 2, true}) == ErrorCode::IllegalMove);
}

TEST_CASE("Witten index is invariant under rewiring")
{
    for (const auto& g : {cycle_graph(6), triangle_with_isolated_vertex(), bottleneck_graph()}) {
        const auto r = verify_witten_invariance(g);
        CHECK(r.invariant);
        CHECK(r.deltas_match);
    }
    for (const auto& g : corpus(92, 25, 2, 8)) {
        const auto r = verify_witten_invariance(g);
        CHECK(r.invariant);
        CHECK(r.deltas_match);
        CHECK(r.moves.size() == enumerate_moves(g).size());
    }
}

TEST_CASE("cycle minimisation")
{
    const auto tri2 = disjoint_union(cycle_graph(3), empty_graph(2));
    const auto a = minimize_cycles(tri2);
    CHECK(a.moves.size() == 1);
    CHECK(cycle_rank(a.graphs.back()) == 0);
    CHECK(a.final_vacuum.n_fermionic_zero == 0);
    CHECK(a.final_vacuum.n_bosonic_zero == 2);

    const auto b = minimize_cycles(disjoint_triangles());
    CHECK(b.moves.size() == 1);
    CHECK(component_count(b.graphs.back()) == 1);
    CHECK(cycle_rank(b.graphs.back()) == 1);
    CHECK(b.final_vacuum.n_bosonic_zero == 1);
    CHECK(b.final_vacuum.n_fermionic_zero == 1);

    CHECK(minimize_cycles(path_graph(5)).moves.empty());
    CHECK(minimize_cycles(cycle_graph(5)).moves.empty());

    for (const auto& g : corpus(93, 40, 2, 10)) {
        const auto r = minimize_cycles(g);
        REQUIRE(r.graphs.size() == r.moves.size() + 1);
        for (std::size_t k = 0; k < r.moves.size(); ++k) {
            const auto d = component_cycle_delta(r.graphs[k], r.moves[k]);
            CHECK(d.components == -1);
            CHECK(d.cycles == -1);
        }
        const auto& last = r.graphs.back();
        CHECK((component_count(last) == 1 || cycle_rank(last) == 0));
        CHECK(witten_index(last).value == witten_index(g).value);
    }
}

TEST_CASE("isomorphism quotient")
{
    const auto c4 = cycle_graph(4);
    const auto relabelled = OrientedGraph::from_pairs(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_form(c4) == canonical_form(relabelled));
    CHECK(canonical_form(c4) != canonical_form(path_graph(4)));

    const auto g = triangle_with_isolated_vertex();
    const auto all = enumerate_moves(g);
    const auto dedup = deduplicate_isomorphic(g, all);
    CHECK(dedup.size() < all.size());
    std::set<std::vector<bool>> classes;
    for (const auto& m : all)
        if (!m.orientation_only)
            classes.insert(canonical_form(apply_move(g, m)));
    CHECK(structural_move_count(dedup) == classes.size());

    try {
        canonical_form(path_graph(9));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}
