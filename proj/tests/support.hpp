#pragma once

// Named quivers and the small-quiver battery shared by the test binaries.

#include "sigma_roots/quiver.hpp"
#include "sigma_roots/tame.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace sigma_roots::testing {

inline Quiver from_arrows(std::size_t k, std::initializer_list<std::array<std::int64_t, 3>> arrows)
{
    std::vector<std::int64_t> m(k * k, 0);
    for (auto [i, j, c] : arrows)
        m[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)] += c;
    return Quiver(k, std::move(m));
}

/// Path 0 -> 1 -> ... -> n-1.
inline Quiver a_n(std::size_t n)
{
    std::vector<std::int64_t> m(n * n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m[i * n + i + 1] = 1;
    return Quiver(n, std::move(m));
}

inline Quiver kronecker() { return from_arrows(2, {{0, 1, 2}}); }
inline Quiver jordan() { return from_arrows(1, {{0, 0, 1}}); }
inline Quiver loops(std::int64_t g) { return from_arrows(1, {{0, 0, g}}); }
/// Centre 0 with three (D4) or four (extended D4) leaves.
inline Quiver star(std::size_t leaves)
{
    std::vector<std::int64_t> m((leaves + 1) * (leaves + 1), 0);
    for (std::size_t i = 1; i <= leaves; ++i)
        m[i * (leaves + 1)] = 1; // leaf -> centre
    return Quiver(leaves + 1, std::move(m));
}

/// Orient a tame diagram: every edge i -> j with i < j.
inline Quiver quiver_of(const UGraph& g)
{
    const auto n = g.vertices();
    std::vector<std::int64_t> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = g.loops(i);
        for (std::size_t j = i + 1; j < n; ++j)
            m[i * n + j] = g.edges(i, j);
    }
    return Quiver(n, std::move(m));
}

struct BatteryQuiver {
    std::string name;
    Quiver quiver;
};

/// Every quiver on k vertices with at most `max_mult` parallel edges per pair
/// and at most `max_mult` loops per vertex, one per isomorphism class of the
/// underlying graph. Edges are oriented from the smaller to the larger index
/// (the sets under test depend on the underlying graph only).
inline std::vector<BatteryQuiver> battery(std::size_t k, std::int64_t max_mult, bool connected_only = false)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            pairs.emplace_back(i, j);
    const std::size_t slots = k + pairs.size();
    std::size_t combos = 1;
    for (std::size_t s = 0; s < slots; ++s)
        combos *= static_cast<std::size_t>(max_mult + 1);

    std::set<std::vector<std::int64_t>> seen;
    std::vector<BatteryQuiver> out;
    for (std::size_t code = 0; code < combos; ++code) {
        std::vector<std::int64_t> m(k * k, 0);
        auto c = code;
        for (std::size_t v = 0; v < k; ++v, c /= static_cast<std::size_t>(max_mult + 1))
            m[v * k + v] = static_cast<std::int64_t>(c % static_cast<std::size_t>(max_mult + 1));
        for (auto [i, j] : pairs) {
            auto e = static_cast<std::int64_t>(c % static_cast<std::size_t>(max_mult + 1));
            c /= static_cast<std::size_t>(max_mult + 1);
            m[i * k + j] = e;
        }
        // canonical form: lexicographically least symmetric matrix over all relabellings
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::int64_t> best;
        do {
            std::vector<std::int64_t> s(k * k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    auto a = perm[i], b = perm[j];
                    s[i * k + j] = a == b ? m[a * k + a] : m[a * k + b] + m[b * k + a];
                }
            if (best.empty() || s < best)
                best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second)
            continue;
        Quiver q(k, m);
        if (connected_only) {
            std::vector<std::int64_t> ones(k, 1);
            if (!support_connected(q, DimVector(ones)))
                continue;
        }
        std::string name = "k" + std::to_string(k) + "[";
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (m[i * k + j] > 0)
                    name += " " + std::to_string(i + 1) + ">" + std::to_string(j + 1) + "x" +
                            std::to_string(m[i * k + j]);
        out.push_back({name + " ]", std::move(q)});
    }
    return out;
}

/// Two nonzero weights per vertex count, as used by the criterion batteries.
inline std::vector<Weight> nonzero_weights(std::size_t k)
{
    auto w = [](std::initializer_list<const char*> xs) {
        std::vector<Rational> r;
        for (auto x : xs)
            r.push_back(parse_rational(x));
        return Weight(std::move(r));
    };
    switch (k) {
    case 1: return {w({"1"}), w({"-1/3"})};
    case 2: return {w({"1", "-1"}), w({"2", "-1"})};
    case 3: return {w({"1", "-1", "0"}), w({"1/2", "1/2", "-1/2"})};
    default: {
        std::vector<Rational> a(k, 0), b(k, 0);
        a[0] = 1;
        a[1] = -1;
        b[0] = 1;
        b[k - 1] = -1;
        return {Weight(a), Weight(b)};
    }
    }
}

} // namespace sigma_roots::testing
