#include "support.hpp"

#include "graphsusy/dynamics.hpp"

using namespace graphsusy;
using testing::corpus;

namespace {

std::vector<Amplitude> random_amplitudes(std::mt19937_64& rng, std::size_t n)
{
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> a(n);
    for (auto& x : a)
        x = {gauss(rng), gauss(rng)};
    return a;
}

double distance(const QuantumState& a, const QuantumState& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        s += std::norm(a.amplitudes[i] - b.amplitudes[i]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("kernel states do not move")
{
    const auto tri = cycle_graph(3);
    const auto flat = make_state(tri, Sector::Vertex, {1.0, 1.0, 1.0});
    for (double t : {0.3, 1.0, 17.0})
        CHECK(distance(evolve(flat, t, tri), flat) < 1e-12);
    CHECK(is_steady(flat, tri));

    const double r = 1.0 / std::sqrt(3.0);
    const auto loop = make_state(tri, Sector::Edge, {r, r, r});
    for (double t : {0.3, 1.0, 17.0})
        CHECK(distance(evolve(loop, t, tri), loop) < 1e-12);
    CHECK(is_steady(loop, tri));
}

TEST_CASE("two-vertex evolution in closed form")
{
    const auto p2 = path_graph(2);
    const double t = std::numbers::pi / 2.0;
    const auto out = evolve(make_state(p2, Sector::Vertex, {1.0, 0.0}), t, p2);
    // eigenpairs (0, (1,1)/√2), (2, (1,-1)/√2)
    const Amplitude ph = std::polar(1.0, 2.0 * t);
    CHECK(std::abs(out.amplitudes[0] - 0.5 * (1.0 + ph)) < 1e-12);
    CHECK(std::abs(out.amplitudes[1] - 0.5 * (1.0 - ph)) < 1e-12);
    CHECK(out.norm() == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("steadiness")
{
    const auto p2 = path_graph(2);
    CHECK_FALSE(is_steady(make_state(p2, Sector::Vertex, {1.0, -1.0}), p2));
    const auto paw = triangle_with_pendant_edge();
    std::vector<Amplitude> e(4, 0.0);
    e[2] = 1.0; // e3 is the bridge
    CHECK_FALSE(is_steady(make_state(paw, Sector::Edge, e), paw));
    CHECK_THROWS_AS(is_steady(make_state(p2, Sector::Vertex, {0.0, 0.0}), p2), Error);
    CHECK(is_steady(make_state(cycle_graph(5), Sector::Vertex, std::vector<Amplitude>(5, 2.0)), cycle_graph(5)));
}

TEST_CASE("state validation")
{
    const auto p2 = path_graph(2);
    CHECK_THROWS_AS(make_state(p2, Sector::Edge, {1.0, 0.0}), Error);
    CHECK_THROWS_AS(make_state(p2, Sector::Vertex, {std::nan(""), 0.0}), Error);
    const auto mixed = make_state(p2, Sector::Mixed, {1.0, 0.0, 1.0});
    CHECK(mixed.split == 2);
}

TEST_CASE("unitarity, group law and steady-state projection")
{
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> times(-10.0, 10.0);
    for (const auto& g : corpus(52, 40, 3, 9)) {
        for (Sector s : {Sector::Vertex, Sector::Edge, Sector::Mixed}) {
            const std::size_t n = sector_dimension(g, s);
            if (n == 0)
                continue;
            const auto psi = make_state(g, s, random_amplitudes(rng, n));
            const double a = times(rng), b = times(rng);
            const auto out = evolve(psi, a, g);
            CHECK(std::abs(out.norm() - psi.norm()) < 1e-10 * std::max(1.0, psi.norm()));
            CHECK(distance(evolve(out, b, g), evolve(psi, a + b, g)) < 1e-9 * std::max(1.0, psi.norm()));

            // steady iff the component outside the kernel vanishes
            const auto kb = steady_states(g, s);
            QuantumState proj = psi;
            for (auto& x : proj.amplitudes)
                x = 0.0;
            for (const auto& v : kb.vectors) {
                Amplitude c{};
                for (std::size_t i = 0; i < n; ++i)
                    c += v[i] * psi.amplitudes[i];
                for (std::size_t i = 0; i < n; ++i)
                    proj.amplitudes[i] += c * v[i];
            }
            if (kb.dim() > 0 && proj.norm() > 1e-6) {
                CHECK(is_steady(proj, g));
                CHECK(distance(evolve(proj, a, g), proj) < 1e-9 * proj.norm());
            }
            const bool off_kernel = distance(proj, psi) > 1e-6 * psi.norm();
            CHECK(is_steady(psi, g) == !off_kernel);
        }
    }
}

TEST_CASE("Euclidean propagator")
{
    const auto p2 = path_graph(2);
    for (auto c : {PropagatorConvention::Psd, PropagatorConvention::Walk}) {
        CHECK(max_abs_diff(euclidean_propagator(cycle_graph(5), 0.0, c), RealMatrix::identity(5)) < 1e-12);
        const auto e = euclidean_propagator(p2, 1.0, c);
        CHECK(e(0, 0) == Catch::Approx((1.0 + std::exp(-2.0)) / 2.0).epsilon(1e-12));
        CHECK(e(0, 1) == Catch::Approx((1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-12));
    }
    const auto tri = euclidean_propagator(cycle_graph(3), 1.0, PropagatorConvention::Walk);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(tri(i, 0) + tri(i, 1) + tri(i, 2) == Catch::Approx(1.0).epsilon(1e-12));

    for (const auto& g : corpus(53, 30)) {
        const auto a = euclidean_propagator(g, 0.7, PropagatorConvention::Psd);
        const auto b = euclidean_propagator(g, 0.7, PropagatorConvention::Walk);
        CHECK(max_abs_diff(a, b) < 1e-9);
        const auto s = euclidean_propagator(g, 0.3, PropagatorConvention::Psd);
        const auto t = euclidean_propagator(g, 0.4, PropagatorConvention::Psd);
        CHECK(max_abs_diff(s * t, a) < 1e-9);
        CHECK(is_symmetric(a, 1e-12));
        if (is_connected(g))
            for (double x : a.data())
                CHECK(x > 0.0);
    }
}
