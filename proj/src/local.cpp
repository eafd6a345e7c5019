#include "sigma_roots/local.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sigma_roots {

UGraph::UGraph(std::size_t vertices) : n_(vertices), edges_(vertices * vertices, 0), loops_(vertices, 0) {}

std::int64_t UGraph::degree(std::size_t v) const
{
    std::int64_t d = 0;
    for (std::size_t w = 0; w < n_; ++w)
        d += edges(v, w);
    return d;
}

std::size_t UGraph::neighbours(std::size_t v) const
{
    std::size_t d = 0;
    for (std::size_t w = 0; w < n_; ++w)
        d += edges(v, w) > 0 ? 1 : 0;
    return d;
}

void UGraph::set_edges(std::size_t i, std::size_t j, std::int64_t m)
{
    if (i >= n_ || j >= n_)
        throw PreconditionError("graph vertex out of range");
    if (i == j)
        throw PreconditionError("use set_loops for loops");
    if (m < 0)
        throw PreconditionError("negative edge multiplicity");
    edges_[i * n_ + j] = m;
    edges_[j * n_ + i] = m;
}

void UGraph::set_loops(std::size_t v, std::int64_t m)
{
    if (v >= n_)
        throw PreconditionError("graph vertex out of range");
    if (m < 0)
        throw PreconditionError("negative loop count");
    loops_[v] = m;
}

UGraph underlying_graph(const Quiver& q)
{
    UGraph g(q.vertices());
    for (std::size_t i = 0; i < q.vertices(); ++i) {
        g.set_loops(i, q.loops(i));
        for (std::size_t j = i + 1; j < q.vertices(); ++j)
            g.set_edges(i, j, q.edge_multiplicity(i, j));
    }
    return g;
}

DimVector RepType::total() const
{
    if (parts.empty())
        throw PreconditionError("empty representation type");
    DimVector sum(parts.front().dim.size());
    for (const auto& part : parts)
        sum = sum + part.dim.scaled(part.multiplicity);
    return sum;
}

DimVector RepType::multiplicities() const
{
    std::vector<std::int64_t> d;
    for (const auto& part : parts)
        d.push_back(part.multiplicity);
    return DimVector(std::move(d));
}

std::vector<DimVector> RepType::dims() const
{
    std::vector<DimVector> r;
    for (const auto& part : parts)
        r.push_back(part.dim);
    return r;
}

std::string to_string(const RepType& t)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        os << (i ? ";" : "") << '(' << t.parts[i].multiplicity;
        for (auto e : t.parts[i].dim.entries())
            os << ',' << e;
        os << ')';
    }
    return os.str();
}

std::int64_t ext_dim(const Quiver& q, const DimVector& b, const DimVector& c) { return -sym(q, b, c); }

UGraph local_graph(const Quiver& q, std::span<const DimVector> family)
{
    UGraph g(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].size() != q.vertices())
            throw PreconditionError("dimension vector length mismatch");
        if (family[i].is_zero())
            throw PreconditionError("local_graph: zero dimension vector in the family");
        auto loops = checked::mul(2, p(q, family[i]));
        if (loops < 0)
            throw PreconditionError("local_graph: p(" + to_string(family[i]) + ") is negative");
        g.set_loops(i, loops);
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            auto e = ext_dim(q, family[i], family[j]);
            if (e < 0)
                throw PreconditionError("local_graph: negative edge count between " + to_string(family[i]) +
                                        " and " + to_string(family[j]));
            g.set_edges(i, j, e);
        }
    }
    return g;
}

namespace {

struct TypeSearch {
    const std::vector<DimVector>& candidates;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<RepPart> current;
    std::vector<RepType> found;

    void run(std::size_t next, const DimVector& remaining)
    {
        if (++nodes > budget)
            throw BudgetExceeded("rep_types: search budget of " + std::to_string(budget) + " nodes exceeded");
        if (remaining.is_zero()) {
            found.push_back(RepType{current});
            return;
        }
        for (std::size_t c = next; c < candidates.size(); ++c) {
            const auto& b = candidates[c];
            if (!b.leq(remaining))
                continue;
            DimVector rest = remaining;
            for (std::int64_t d = 1; b.leq(rest); ++d) {
                rest = rest - b;
                current.push_back({d, b});
                run(c + 1, rest);
                current.pop_back();
            }
        }
    }
};

} // namespace

std::vector<RepType> rep_types(const SigmaSolver& solver, const DimVector& a, std::uint64_t budget)
{
    if (a.size() != solver.quiver().vertices())
        throw PreconditionError("dimension vector length mismatch");
    if (a.is_zero())
        throw PreconditionError("rep_types: zero vector");
    if (!solver.box().contains(a))
        throw PreconditionError("rep_types: vector outside the solver box");

    std::vector<DimVector> candidates;
    for (const auto& b : solver.members())
        if (b != a && b.leq(a))
            candidates.push_back(b);

    TypeSearch search{candidates, budget, 0, {}, {}};
    search.run(0, a);
    // parts are generated in canonical order of b; order the types themselves
    std::sort(search.found.begin(), search.found.end(), [](const RepType& x, const RepType& y) {
        return std::lexicographical_compare(
            x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end(), [](const RepPart& u, const RepPart& v) {
                if (u.dim != v.dim)
                    return graded_less(u.dim, v.dim);
                return u.multiplicity < v.multiplicity;
            });
    });
    return search.found;
}

std::vector<RepType> rep_types(const Quiver& q, const Weight& l, const DimVector& a, std::uint64_t budget)
{
    if (a.size() == q.vertices() && a.is_zero())
        throw PreconditionError("rep_types: zero vector");
    return rep_types(SigmaSolver(q, l, a), a, budget);
}

RepType refine_type(const Quiver& q, const RepType& t, int threshold)
{
    if (threshold != 0 && threshold != 1)
        throw PreconditionError("refinement threshold must be 0 or 1");
    RepType r;
    for (const auto& part : t.parts) {
        if (p(q, part.dim) > threshold)
            for (std::int64_t i = 0; i < part.multiplicity; ++i)
                r.parts.push_back({1, part.dim});
        else
            r.parts.push_back(part);
    }
    return r;
}

} // namespace sigma_roots
