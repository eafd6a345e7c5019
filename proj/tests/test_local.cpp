#include "sigma_roots/errors.hpp"
#include "sigma_roots/local.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace sigma_roots;
using namespace sigma_roots::testing;

namespace {

// All multisets over `parts` summing to a, as (multiplicity, dim) types,
// minus the trivial type. Independent of the library's search.
std::set<std::vector<std::pair<std::int64_t, DimVector>>> brute_types(const std::vector<DimVector>& parts,
                                                                       const DimVector& a)
{
    std::set<std::vector<std::pair<std::int64_t, DimVector>>> out;
    std::vector<std::int64_t> mult(parts.size(), 0);
    std::function<void(std::size_t, DimVector)> go = [&](std::size_t i, DimVector rest) {
        if (i == parts.size()) {
            if (!rest.is_zero())
                return;
            std::vector<std::pair<std::int64_t, DimVector>> t;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (mult[j] > 0)
                    t.emplace_back(mult[j], parts[j]);
            if (!(t.size() == 1 && t[0].first == 1 && t[0].second == a))
                out.insert(t);
            return;
        }
        for (mult[i] = 0;; ++mult[i]) {
            go(i + 1, rest);
            if (!parts[i].leq(rest))
                break;
            rest = rest - parts[i];
        }
        mult[i] = 0;
    };
    go(0, a);
    return out;
}

} // namespace

TEST_CASE("ext dimension")
{
    CHECK(ext_dim(kronecker(), {1, 0}, {0, 1}) == 2);
    CHECK(ext_dim(a_n(2), {1, 0}, {0, 1}) == 1);
    auto q = from_arrows(3, {{0, 1, 2}, {2, 1, 1}, {2, 2, 1}});
    Box box({2, 2, 2});
    for (std::size_t i = 1; i < box.size(); i += 3)
        for (std::size_t j = 1; j < box.size(); j += 5)
            CHECK(ext_dim(q, box.at(i), box.at(j)) == ext_dim(q, box.at(j), box.at(i)));
}

TEST_CASE("local graph")
{
    std::vector<DimVector> simples{{1, 0}, {0, 1}};
    auto g = local_graph(kronecker(), simples);
    CHECK(g.vertices() == 2);
    CHECK(g.loops(0) == 0);
    CHECK(g.loops(1) == 0);
    CHECK(g.edges(0, 1) == 2);

    std::vector<DimVector> one{{1}};
    auto h = local_graph(loops(2), one);
    CHECK(h.loops(0) == 4);

    std::vector<DimVector> twice{{1, 1}, {1, 1}};
    auto t = local_graph(kronecker(), twice);
    CHECK(t.loops(0) == 2);
    CHECK(t.loops(1) == 2);
    CHECK(t.edges(0, 1) == 0);

    // (2,0) has p = -3 on A2
    std::vector<DimVector> bad{{2, 0}};
    CHECK_THROWS_AS(local_graph(a_n(2), bad), PreconditionError);
    std::vector<DimVector> overlap{{1, 0}, {1, 1}};
    CHECK_THROWS_AS(local_graph(a_n(2), overlap), PreconditionError);
}

TEST_CASE("local graph of the vertex simples is the underlying graph")
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& b : battery(k, 2)) {
            bool loop_free = true;
            for (std::size_t v = 0; v < k; ++v)
                loop_free = loop_free && b.quiver.loops(v) == 0;
            if (!loop_free)
                continue;
            std::vector<DimVector> simples;
            for (std::size_t v = 0; v < k; ++v)
                simples.push_back(DimVector::unit(k, v));
            auto g = local_graph(b.quiver, simples);
            CHECK(g == underlying_graph(b.quiver));
            for (std::size_t i = 0; i < k; ++i) {
                CHECK(g.loops(i) % 2 == 0);
                for (std::size_t j = i + 1; j < k; ++j)
                    CHECK(g.edges(i, j) == ext_dim(b.quiver, simples[i], simples[j]));
            }
        }
}

TEST_CASE("representation types")
{
    auto z2 = Weight::zero(2);
    auto t11 = rep_types(kronecker(), z2, {1, 1});
    REQUIRE(t11.size() == 1);
    CHECK(t11[0] == RepType{{{1, {1, 0}}, {1, {0, 1}}}});

    auto t22 = rep_types(kronecker(), z2, {2, 2});
    CHECK(t22 == std::vector<RepType>{RepType{{{1, {1, 0}}, {1, {0, 1}}, {1, {1, 1}}}},
                                      RepType{{{2, {1, 0}}, {2, {0, 1}}}},
                                      RepType{{{2, {1, 1}}}}});

    CHECK(rep_types(a_n(3), Weight::zero(3), {0, 1, 0}).empty());
    CHECK_THROWS_AS(rep_types(loops(2), Weight::zero(1), {8}, 20), BudgetExceeded);
}

TEST_CASE("representation types agree with multiset enumeration and re-validate")
{
    std::vector<Quiver> quivers = {kronecker(), a_n(2), from_arrows(2, {{0, 0, 1}, {0, 1, 1}, {1, 1, 2}}),
                                   from_arrows(2, {{0, 1, 2}, {1, 1, 1}})};
    for (const auto& q : quivers) {
        std::vector<Weight> weights{Weight::zero(2), Weight(std::vector<Rational>{1, -1})};
        for (const auto& l : weights) {
            SigmaSolver solver(q, l, {3, 3});
            auto members = solver.members();
            for (const auto& a : solver.box().nonzero_sorted()) {
                std::vector<DimVector> parts;
                for (const auto& m : members)
                    if (m.leq(a))
                        parts.push_back(m);
                auto expected = brute_types(parts, a);
                auto got = rep_types(solver, a);
                std::set<std::vector<std::pair<std::int64_t, DimVector>>> got_set;
                for (const auto& t : got) {
                    CHECK(t.total() == a);
                    CHECK_FALSE((t.parts.size() == 1 && t.parts[0].multiplicity == 1));
                    std::vector<std::pair<std::int64_t, DimVector>> flat;
                    std::set<DimVector> distinct;
                    for (const auto& part : t.parts) {
                        CHECK(solver.member(part.dim));
                        flat.emplace_back(part.multiplicity, part.dim);
                        distinct.insert(part.dim);
                    }
                    CHECK(distinct.size() == t.parts.size());
                    got_set.insert(flat);
                }
                CHECK(got_set.size() == got.size());
                CHECK(got_set == expected);
            }
        }
    }
}

TEST_CASE("refinement")
{
    RepType t{{{2, {1, 1}}}};
    CHECK(refine_type(kronecker(), t, 0) == RepType{{{1, {1, 1}}, {1, {1, 1}}}});
    CHECK(refine_type(kronecker(), t, 1) == t);
    RepType s{{{2, {1, 0}}}};
    CHECK(refine_type(kronecker(), s, 0) == s);
    RepType big{{{3, {1}}}};
    CHECK(refine_type(loops(2), big, 1).parts.size() == 3);
    CHECK_THROWS_AS(refine_type(kronecker(), t, 2), PreconditionError);
}
