#include "sigma_roots/genetic.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <map>

namespace sigma_roots {

std::vector<DimVector> seeds(const Quiver& q, const Weight& l, const DimVector& bound, SeedMode mode)
{
    if (l.size() != q.vertices())
        throw PreconditionError("weight length does not match the quiver");
    std::vector<DimVector> eligible;
    for (auto& root : positive_roots_upto(q, bound)) {
        if (pair(l, root.root) != 0)
            continue;
        if (mode == SeedMode::RealRoots && root.kind != RootClass::RealRoot)
            continue;
        eligible.push_back(std::move(root.root));
    }
    if (mode == SeedMode::RealRoots)
        return eligible;
    std::vector<DimVector> minimal;
    for (const auto& a : eligible) {
        bool dominated = std::any_of(eligible.begin(), eligible.end(),
                                     [&](const DimVector& b) { return b != a && b.leq(a); });
        if (!dominated)
            minimal.push_back(a);
    }
    return minimal;
}

bool valid_certificate(const Quiver& q, const GeneticCert& cert)
{
    const auto& d = cert.setting;
    if (cert.parts.size() != d.vertices() || cert.target.size() != q.vertices())
        return false;
    DimVector sum(q.vertices());
    for (std::size_t u = 0; u < cert.parts.size(); ++u) {
        const auto& part = cert.parts[u];
        if (part.dim.size() != q.vertices() || part.dim.is_zero() || part.coefficient != d.delta[u])
            return false;
        sum = sum + part.dim.scaled(part.coefficient);
        for (std::size_t v = u + 1; v < cert.parts.size(); ++v) {
            const auto& other = cert.parts[v].dim;
            if (other == part.dim && p(q, part.dim) <= 0)
                return false;
            if (d.graph.edges(u, v) > -sym(q, part.dim, other))
                return false;
        }
    }
    return sum == cert.target;
}

GeneticBudgetExceeded::GeneticBudgetExceeded(std::size_t round, std::vector<ClosureMember> partial)
    : BudgetExceeded("genetic closure: budget exceeded in round " + std::to_string(round)),
      round_(round),
      partial_(std::move(partial))
{}

namespace {

struct Member {
    DimVector dim;
    std::int64_t p;
};

// Places members on the vertices of one tame setting.
struct AssignmentSearch {
    const Quiver& q;
    const DimVector& bound;
    const std::vector<Member>& members;
    const TameSetting& d;
    std::vector<std::size_t> order;
    std::vector<std::int64_t> delta_after; // sum of delta over order[i..]
    std::uint64_t& nodes;
    std::uint64_t budget;
    std::function<void(const std::vector<std::size_t>&, const DimVector&)> emit;

    std::vector<std::size_t> chosen; // member index per diagram vertex
    std::vector<int> uses;

    void run(std::size_t depth, const DimVector& partial)
    {
        if (++nodes > budget)
            throw BudgetExceeded("genetic closure budget exceeded");
        if (depth == order.size()) {
            emit(chosen, partial);
            return;
        }
        // each remaining vertex adds at least delta_u to the total dimension
        if (partial.total() + delta_after[depth] > bound.total())
            return;
        const auto u = order[depth];
        for (std::size_t c = 0; c < members.size(); ++c) {
            const auto& m = members[c];
            if (uses[c] > 0 && m.p <= 0)
                continue;
            std::vector<std::int64_t> next(partial.size());
            bool fits = true;
            for (std::size_t v = 0; v < next.size() && fits; ++v) {
                next[v] = partial[v] + d.delta[u] * m.dim[v];
                fits = next[v] <= bound[v];
            }
            if (!fits)
                continue;
            for (std::size_t i = 0; i < depth && fits; ++i) {
                auto w = order[i];
                auto need = d.graph.edges(u, w);
                fits = need == 0 || need <= -sym(q, m.dim, members[chosen[w]].dim);
            }
            if (!fits)
                continue;
            chosen[u] = c;
            ++uses[c];
            run(depth + 1, DimVector(std::move(next)));
            --uses[c];
        }
    }
};

} // namespace

std::vector<ClosureMember> genetic_closure(const Quiver& q, const Weight& l, const DimVector& bound,
                                           const GeneticOptions& options)
{
    std::map<DimVector, ClosureMember> found;
    for (auto& s : seeds(q, l, bound, options.seed_mode))
        found.emplace(s, ClosureMember{s, 0, std::nullopt});

    auto snapshot = [&] {
        std::vector<ClosureMember> r;
        for (const auto& [dim, m] : found)
            r.push_back(m);
        std::sort(r.begin(), r.end(),
                  [](const ClosureMember& x, const ClosureMember& y) { return graded_less(x.dim, y.dim); });
        return r;
    };

    const auto settings = catalog(static_cast<std::size_t>(std::max<std::int64_t>(bound.total(), 2)));
    std::uint64_t nodes = 0;
    for (std::size_t round = 1;; ++round) {
        std::vector<Member> members;
        for (const auto& m : snapshot())
            members.push_back({m.dim, p(q, m.dim)});

        std::map<DimVector, GeneticCert, GradedLess> fresh;
        try {
            for (const auto& setting : settings) {
                AssignmentSearch search{q, bound, members, setting, search_order(setting), {}, nodes, options.budget,
                                        {}, {}, {}};
                const auto n = setting.vertices();
                search.delta_after.assign(n + 1, 0);
                for (std::size_t i = n; i-- > 0;)
                    search.delta_after[i] = search.delta_after[i + 1] + setting.delta[search.order[i]];
                search.chosen.assign(n, 0);
                search.uses.assign(members.size(), 0);
                search.emit = [&](const std::vector<std::size_t>& chosen, const DimVector& target) {
                    if (found.contains(target) || fresh.contains(target))
                        return;
                    GeneticCert cert{target, {}, setting, round};
                    for (std::size_t u = 0; u < n; ++u)
                        cert.parts.push_back({setting.delta[u], members[chosen[u]].dim});
                    fresh.emplace(target, std::move(cert));
                };
                search.run(0, DimVector(q.vertices()));
            }
        } catch (const BudgetExceeded&) {
            throw GeneticBudgetExceeded(round, snapshot());
        }
        if (fresh.empty())
            break;
        for (auto& [dim, cert] : fresh)
            found.emplace(dim, ClosureMember{dim, round, std::move(cert)});
    }
    return snapshot();
}

IrreducibleResult irreducible_sigma_check(const SigmaSolver& solver, const DimVector& a, std::uint64_t budget,
                                          int refine_threshold)
{
    const auto& q = solver.quiver();
    IrreducibleResult result;
    auto types = rep_types(solver, a, budget);
    if (types.empty()) {
        // only the trivial type could exist
        result.holds = solver.root_class(a) != RootClass::NotRoot && pair(solver.weight(), a) == 0;
        return result;
    }
    for (const auto& t : types) {
        ++result.types_checked;
        auto refined = refine_type(q, t, refine_threshold);
        auto dims = refined.dims();
        auto g = local_graph(q, dims);
        if (!contains_tame(g, refined.multiplicities())) {
            result.failing = t;
            return result;
        }
    }
    result.holds = true;
    return result;
}

IrreducibleResult irreducible_sigma_check(const Quiver& q, const Weight& l, const DimVector& a, std::uint64_t budget,
                                          int refine_threshold)
{
    if (a.size() == q.vertices() && a.is_zero())
        throw PreconditionError("irreducible_sigma_check: zero vector");
    return irreducible_sigma_check(SigmaSolver(q, l, a), a, budget, refine_threshold);
}

bool CompareRecord::discrepancy() const
{
    if (!irreducible)
        return true;
    bool in_closure = closure.has_value();
    return verdict.member != in_closure || verdict.member != irreducible->holds;
}

std::vector<const CompareRecord*> CompareReport::discrepancies() const
{
    std::vector<const CompareRecord*> r;
    for (const auto& rec : records)
        if (rec.discrepancy())
            r.push_back(&rec);
    return r;
}

CompareReport compare(const Quiver& q, const Weight& l, const DimVector& bound, const GeneticOptions& options)
{
    CompareReport report;
    SigmaSolver solver(q, l, bound, options.threads);
    report.sigma = solver.members();
    try {
        report.closure = genetic_closure(q, l, bound, options);
    } catch (const GeneticBudgetExceeded& e) {
        report.closure = e.partial();
        report.closure_error = e.what();
    }
    std::map<DimVector, const ClosureMember*> in_closure;
    for (const auto& m : report.closure) {
        in_closure.emplace(m.dim, &m);
        report.genetic.push_back(m.dim);
    }
    for (const auto& a : solver.box().nonzero_sorted()) {
        CompareRecord rec{a, solver.verdict(a), std::nullopt, std::nullopt, {}};
        if (auto it = in_closure.find(a); it != in_closure.end())
            rec.closure = *it->second;
        try {
            rec.irreducible = irreducible_sigma_check(solver, a, options.budget, options.refine_threshold);
            if (rec.irreducible->holds)
                report.irreducible.push_back(a);
        } catch (const BudgetExceeded& e) {
            rec.error = e.what();
        } catch (const PreconditionError& e) {
            rec.error = e.what();
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

} // namespace sigma_roots
