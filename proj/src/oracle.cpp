#include "sigma_roots/oracle.hpp"

#include "sigma_roots/errors.hpp"
#include "sigma_roots/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sigma_roots::oracle {

namespace {

std::vector<DimVector> orbit_in_box(const Quiver& q, const DimVector& bound, std::vector<DimVector> start)
{
    std::set<DimVector> seen(start.begin(), start.end());
    std::deque<DimVector> queue(start.begin(), start.end());
    while (!queue.empty()) {
        auto a = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < q.vertices(); ++v) {
            if (q.loops(v) != 0)
                continue;
            auto r = reflect(q, a, v);
            if (!r.nonnegative())
                continue;
            bool inside = true;
            for (std::size_t i = 0; i < r.size() && inside; ++i)
                inside = r[i] <= bound[i];
            if (!inside)
                continue;
            auto d = r.to_dim();
            if (!d.is_zero() && seen.insert(d).second)
                queue.push_back(std::move(d));
        }
    }
    std::vector<DimVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

void require_bound(const Quiver& q, const DimVector& bound)
{
    if (bound.size() != q.vertices())
        throw PreconditionError("bound length does not match the quiver");
}

} // namespace

std::vector<DimVector> weyl_real_roots(const Quiver& q, const DimVector& bound)
{
    require_bound(q, bound);
    std::vector<DimVector> start;
    for (std::size_t v = 0; v < q.vertices(); ++v)
        if (q.loops(v) == 0 && bound[v] >= 1)
            start.push_back(DimVector::unit(q.vertices(), v));
    return orbit_in_box(q, bound, std::move(start));
}

std::vector<DimVector> weyl_imaginary_roots(const Quiver& q, const DimVector& bound)
{
    require_bound(q, bound);
    Box box(bound);
    std::vector<DimVector> start;
    for (std::size_t i = 1; i < box.size(); ++i) {
        auto a = box.at(i);
        if (in_fundamental_region(q, a))
            start.push_back(std::move(a));
    }
    return orbit_in_box(q, bound, std::move(start));
}

namespace {

struct Enumerator {
    const std::vector<DimVector>& parts;
    std::vector<DimVector> current;
    std::vector<std::vector<DimVector>> out;

    void run(std::size_t from, const DimVector& remaining)
    {
        if (remaining.is_zero()) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < parts.size(); ++i) {
            if (!parts[i].leq(remaining))
                continue;
            current.push_back(parts[i]);
            run(i, remaining - parts[i]); // same part may repeat
            current.pop_back();
        }
    }
};

} // namespace

std::vector<std::vector<DimVector>> brute_decompositions(const Quiver& q, const Weight& l, const DimVector& a)
{
    require_bound(q, a);
    if (a.is_zero())
        throw PreconditionError("brute_decompositions: zero vector");
    if (a.total() > kBruteTotalCap)
        throw PreconditionError("brute_decompositions: total dimension above the oracle cap of 12");
    if (l.size() != q.vertices())
        throw PreconditionError("weight length does not match the quiver");

    auto real = weyl_real_roots(q, a);
    auto imaginary = weyl_imaginary_roots(q, a);
    std::vector<DimVector> eligible;
    for (const auto* family : {&real, &imaginary})
        for (const auto& b : *family)
            if (pair(l, b) == 0)
                eligible.push_back(b);
    std::sort(eligible.begin(), eligible.end(), graded_less);

    Enumerator e{eligible, {}, {}};
    e.run(0, a);
    return e.out;
}

std::optional<std::int64_t> brute_max_decomp_sum(const Quiver& q, const Weight& l, const DimVector& a,
                                                 bool proper_only)
{
    std::optional<std::int64_t> best;
    for (const auto& d : brute_decompositions(q, l, a)) {
        if (proper_only && d.size() < 2)
            continue;
        std::int64_t s = 0;
        for (const auto& b : d)
            s += p(q, b);
        if (!best || s > *best)
            best = s;
    }
    return best;
}

bool brute_in_sigma(const Quiver& q, const Weight& l, const DimVector& a)
{
    auto decompositions = brute_decompositions(q, l, a);
    bool eligible = std::any_of(decompositions.begin(), decompositions.end(),
                                [](const auto& d) { return d.size() == 1; });
    if (!eligible)
        return false;
    const auto pa = p(q, a);
    for (const auto& d : decompositions) {
        if (d.size() < 2)
            continue;
        std::int64_t s = 0;
        for (const auto& b : d)
            s += p(q, b);
        if (s >= pa)
            return false;
    }
    return true;
}

} // namespace sigma_roots::oracle
