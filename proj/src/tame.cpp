#include "sigma_roots/tame.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sigma_roots {

std::string TameSetting::name() const
{
    switch (family) {
    case TameFamily::A: return "A~" + std::to_string(m);
    case TameFamily::D: return "D~" + std::to_string(m);
    case TameFamily::E6: return "E~6";
    case TameFamily::E7: return "E~7";
    case TameFamily::E8: return "E~8";
    }
    return "?";
}

namespace {

TameSetting path_with_arm(TameFamily family, std::size_t m, std::vector<std::int64_t> delta, std::size_t path_len,
                          std::vector<std::pair<std::size_t, std::size_t>> extra)
{
    UGraph g(delta.size());
    for (std::size_t i = 0; i + 1 < path_len; ++i)
        g.set_edges(i, i + 1, 1);
    for (auto [u, v] : extra)
        g.set_edges(u, v, 1);
    return {family, m, std::move(g), DimVector(std::move(delta))};
}

} // namespace

TameSetting make_tame(TameFamily family, std::size_t m)
{
    switch (family) {
    case TameFamily::A: {
        if (m < 1)
            throw PreconditionError("A~m needs m >= 1");
        UGraph g(m + 1);
        if (m == 1) {
            g.set_edges(0, 1, 2);
        } else {
            for (std::size_t i = 0; i <= m; ++i)
                g.set_edges(i, (i + 1) % (m + 1), 1);
        }
        return {family, m, std::move(g), DimVector(std::vector<std::int64_t>(m + 1, 1))};
    }
    case TameFamily::D: {
        if (m < 4)
            throw PreconditionError("D~m needs m >= 4");
        UGraph g(m + 1);
        std::vector<std::int64_t> delta(m + 1, 2);
        const std::size_t first = 2, last = m - 2;
        for (std::size_t leaf : {std::size_t{0}, std::size_t{1}}) {
            g.set_edges(leaf, first, 1);
            delta[leaf] = 1;
        }
        for (std::size_t leaf : {m - 1, m}) {
            g.set_edges(leaf, last, 1);
            delta[leaf] = 1;
        }
        for (std::size_t i = first; i < last; ++i)
            g.set_edges(i, i + 1, 1);
        return {family, m, std::move(g), DimVector(std::move(delta))};
    }
    case TameFamily::E6: return path_with_arm(family, 6, {1, 2, 3, 2, 1, 2, 1}, 5, {{2, 5}, {5, 6}});
    case TameFamily::E7: return path_with_arm(family, 7, {1, 2, 3, 4, 3, 2, 1, 2}, 7, {{3, 7}});
    case TameFamily::E8: return path_with_arm(family, 8, {2, 4, 6, 5, 4, 3, 2, 1, 3}, 8, {{2, 8}});
    }
    throw PreconditionError("unknown tame family");
}

std::vector<TameSetting> catalog(std::size_t max_vertices)
{
    std::vector<TameSetting> r;
    for (std::size_t n = 2; n <= max_vertices; ++n) {
        r.push_back(make_tame(TameFamily::A, n - 1));
        if (n >= 5)
            r.push_back(make_tame(TameFamily::D, n - 1));
        if (n == 7)
            r.push_back(make_tame(TameFamily::E6));
        if (n == 8)
            r.push_back(make_tame(TameFamily::E7));
        if (n == 9)
            r.push_back(make_tame(TameFamily::E8));
    }
    return r;
}

bool valid_containment(const UGraph& g, const DimVector& a, const Containment& c)
{
    const auto& d = c.setting;
    const auto& map = c.embedding.map;
    if (map.size() != d.vertices() || a.size() != g.vertices())
        return false;
    std::set<std::size_t> image(map.begin(), map.end());
    if (image.size() != map.size() || (!map.empty() && *image.rbegin() >= g.vertices()))
        return false;
    for (std::size_t u = 0; u < d.vertices(); ++u) {
        if (d.delta[u] > a[map[u]])
            return false;
        for (std::size_t v = u + 1; v < d.vertices(); ++v)
            if (d.graph.edges(u, v) > g.edges(map[u], map[v]))
                return false;
    }
    return true;
}

std::vector<std::size_t> search_order(const TameSetting& d)
{
    std::size_t anchor = 0;
    for (std::size_t u = 1; u < d.vertices(); ++u)
        if (d.delta[u] > d.delta[anchor])
            anchor = u;
    std::vector<std::size_t> order;
    std::vector<char> seen(d.vertices(), 0);
    std::deque<std::size_t> queue{anchor};
    seen[anchor] = 1;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (std::size_t v = 0; v < d.vertices(); ++v)
            if (!seen[v] && d.graph.edges(u, v) > 0) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    return order;
}

namespace {

struct EmbeddingSearch {
    const UGraph& g;
    const DimVector& a;
    const TameSetting& d;
    const std::function<bool(const Embedding&)>& visit;
    std::vector<std::size_t> order;
    Embedding current;
    std::vector<char> used;
    std::uint64_t nodes = 0;

    // returns false once the visitor asks to stop
    bool run(std::size_t depth)
    {
        ++nodes;
        if (depth == order.size())
            return visit(current);
        const auto u = order[depth];
        for (std::size_t t = 0; t < g.vertices(); ++t) {
            if (used[t] || a[t] < d.delta[u] || g.degree(t) < d.graph.degree(u) ||
                g.neighbours(t) < d.graph.neighbours(u))
                continue;
            bool fits = true;
            for (std::size_t i = 0; i < depth && fits; ++i) {
                auto w = order[i];
                fits = d.graph.edges(u, w) <= g.edges(current.map[w], t);
            }
            if (!fits)
                continue;
            used[t] = 1;
            current.map[u] = t;
            bool go_on = run(depth + 1);
            used[t] = 0;
            if (!go_on)
                return false;
        }
        return true;
    }
};

} // namespace

std::uint64_t for_each_embedding(const UGraph& g, const DimVector& a, const TameSetting& setting,
                                 const std::function<bool(const Embedding&)>& visit)
{
    if (a.size() != g.vertices())
        throw PreconditionError("target vector length does not match the graph");
    if (setting.vertices() > g.vertices())
        return 0;
    EmbeddingSearch search{g, a, setting, visit, search_order(setting), {}, {}};
    search.current.map.assign(setting.vertices(), 0);
    search.used.assign(g.vertices(), 0);
    search.run(0);
    return search.nodes;
}

std::optional<Containment> contains_tame(const UGraph& g, const DimVector& a)
{
    if (a.size() != g.vertices())
        throw PreconditionError("target vector length does not match the graph");
    for (auto& setting : catalog(g.vertices())) {
        std::optional<Embedding> hit;
        for_each_embedding(g, a, setting, [&](const Embedding& e) {
            hit = e;
            return false;
        });
        if (hit)
            return Containment{std::move(setting), std::move(*hit)};
    }
    return std::nullopt;
}

std::vector<Containment> find_all_tame(const UGraph& g, const DimVector& a)
{
    if (a.size() != g.vertices())
        throw PreconditionError("target vector length does not match the graph");
    std::vector<Containment> r;
    auto settings = catalog(g.vertices());
    for (std::size_t s = 0; s < settings.size(); ++s) {
        std::set<std::vector<std::pair<std::size_t, std::int64_t>>> classes;
        for_each_embedding(g, a, settings[s], [&](const Embedding& e) {
            std::vector<std::pair<std::size_t, std::int64_t>> key;
            for (std::size_t u = 0; u < e.map.size(); ++u)
                key.emplace_back(e.map[u], settings[s].delta[u]);
            std::sort(key.begin(), key.end());
            if (classes.insert(std::move(key)).second)
                r.push_back({settings[s], e});
            return true;
        });
    }
    return r;
}

} // namespace sigma_roots
