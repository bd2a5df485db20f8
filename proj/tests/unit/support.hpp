#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "graphsusy/generators.hpp"

namespace testing {

using namespace graphsusy;

/// Random oriented graphs on [lo, hi] vertices with random densities.
inline std::vector<OrientedGraph> corpus(std::uint64_t seed, std::size_t count, std::size_t lo = 3, std::size_t hi = 12)
{
    return random_corpus(seed, count, lo, hi);
}

/// Rank over GF(p) of integer row vectors. A full rank here implies full
/// rank over the rationals.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows)
{
    constexpr std::int64_t p = 1'000'000'007;
    auto norm = [](std::int64_t x) { return ((x % p) + p) % p; };
    auto inv = [&](std::int64_t a) {
        std::int64_t r = 1, e = p - 2;
        a = norm(a);
        while (e) {
            if (e & 1)
                r = static_cast<std::int64_t>((__int128)r * a % p);
            a = static_cast<std::int64_t>((__int128)a * a % p);
            e >>= 1;
        }
        return r;
    };
    for (auto& r : rows)
        for (auto& x : r)
            x = norm(x);
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t iv = inv(rows[rank][c]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const std::int64_t f = static_cast<std::int64_t>((__int128)rows[r][c] * iv % p);
            for (std::size_t k = 0; k < cols; ++k)
                rows[r][k] = norm(rows[r][k] - static_cast<std::int64_t>((__int128)f * rows[rank][k] % p));
        }
        ++rank;
    }
    return rank;
}

/// Union-find component count, independent of the library's DFS.
inline std::size_t components_oracle(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t count = n;
    for (const auto& e : edges) {
        const auto a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

} // namespace testing
