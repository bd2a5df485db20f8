#include "support.hpp"

#include "graphsusy/continuum.hpp"

using namespace graphsusy;

namespace {

void check_multiset(std::vector<double> got, std::vector<double> want)
{
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

} // namespace

TEST_CASE("exact cycle spectra")
{
    check_multiset(cycle_spectrum_exact(3), {0, 3, 3});
    check_multiset(cycle_spectrum_exact(4), {0, 2, 2, 4});
    check_multiset(cycle_spectrum_exact(6), {0, 1, 1, 3, 3, 4});
    for (std::size_t n : {3u, 7u, 12u, 31u}) {
        const auto num = eigvals_sym(laplacian_even(cycle_graph(n)).cast<double>());
        check_multiset(num, cycle_spectrum_exact(n));
    }
}

TEST_CASE("scaled modes approach k squared")
{
    CHECK(scaled_mode(100, 0) == 0.0);
    CHECK(std::abs(scaled_mode(1000, 1) - 1.0) < 1e-5);
    const auto s = scaled_spectrum(8);
    CHECK(s.size() == 8);
    CHECK(std::abs(s[4] - 64.0 / (std::numbers::pi * std::numbers::pi)) < 1e-12);
}

TEST_CASE("convergence study")
{
    const auto st = convergence_study({1000, 10, 100}, 5);
    REQUIRE(st.rows.size() == 18);
    CHECK(st.rows.front().n == 10);
    CHECK(st.monotone);
    CHECK(st.odd_matches_even);
    CHECK(st.max_closed_form_gap < 1e-9);
    for (const auto& r : st.rows) {
        CHECK(std::abs(r.closed_form - static_cast<double>(r.k * r.k)) / std::max(1.0, r.target) <= r.taylor_bound + 1e-15);
        if (r.k == 0) {
            CHECK(r.relative_error < 1e-9);
            continue;
        }
        // the numerical error exceeds the closed-form error only by rounding
        CHECK(r.relative_error <= r.taylor_bound + 1e-9);
        const double x = static_cast<double>(r.k) * std::numbers::pi / static_cast<double>(r.n);
        CHECK(r.relative_error >= x * x / 3.0 - 2.0 * x * x * x * x / 45.0 - 1e-9);
        if (r.n == 1000)
            CHECK(r.relative_error < 1e-4);
    }
}

TEST_CASE("continuum argument errors")
{
    CHECK_THROWS_AS(cycle_spectrum_exact(2), Error);
    CHECK_THROWS_AS(scaled_spectrum(1), Error);
    CHECK_THROWS_AS(convergence_study({10}, 6), Error);
    CHECK_THROWS_AS(convergence_study({2, 10}, 1), Error);
    CHECK_NOTHROW(convergence_study({11}, 5));

    // k = n/2 is the simple top eigenvalue 4
    const auto st = convergence_study({10}, 5);
    CHECK(std::abs(st.rows.back().scaled_eigenvalue - 4.0 / std::pow(2.0 * std::numbers::pi / 10.0, 2)) < 1e-12);
}
