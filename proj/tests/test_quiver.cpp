#include "sigma_roots/errors.hpp"
#include "sigma_roots/quiver.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace sigma_roots;
using namespace sigma_roots::testing;

namespace {

// Independent route: build the Euler matrix entrywise and evaluate a^T X b.
std::int64_t euler_by_matrix(const Quiver& q, const DimVector& a, const DimVector& b)
{
    const auto k = q.vertices();
    std::int64_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::int64_t x = (i == j ? 1 : 0) - q.arrows(i, j);
            r += a[i] * x * b[j];
        }
    return r;
}

DimVector random_vector(std::mt19937& rng, std::size_t k, int max)
{
    std::uniform_int_distribution<int> d(0, max);
    std::vector<std::int64_t> v(k);
    for (auto& e : v)
        e = d(rng);
    return DimVector(v);
}

Quiver random_quiver(std::mt19937& rng, std::size_t k)
{
    std::uniform_int_distribution<int> d(0, 2);
    std::vector<std::int64_t> m(k * k);
    for (auto& e : m)
        e = d(rng);
    return Quiver(k, m);
}

} // namespace

TEST_CASE("euler form examples")
{
    auto arrow = a_n(2);
    CHECK(euler(arrow, {1, 0}, {0, 1}) == -1);
    CHECK(euler(arrow, {0, 1}, {1, 0}) == 0);
    for (std::int64_t n = 1; n <= 5; ++n)
        CHECK(euler(jordan(), {n}, {n}) == 0);
    CHECK(euler_by_matrix(kronecker(), {1, 1}, {1, 1}) == 0);
    CHECK(euler(kronecker(), {1, 1}, {1, 1}) == 0);
    CHECK_THROWS_AS(euler(arrow, {1}, {1, 0}), PreconditionError);
}

TEST_CASE("p examples")
{
    CHECK(p(jordan(), {1}) == 1);
    for (std::int64_t n = 1; n <= 6; ++n) {
        CHECK(euler_by_matrix(loops(2), {n}, {n}) == n * n - 2 * n * n);
        CHECK(p(loops(2), {n}) == 1 + n * n);
    }
    for (const auto& s : catalog(10)) {
        CHECK(p(quiver_of(s.graph), s.delta) == 1);
        CHECK(p(quiver_of(s.graph).reversed(), s.delta) == 1);
    }
    CHECK_THROWS_AS(p(jordan(), {1, 1}), PreconditionError);
}

TEST_CASE("symmetrized form examples")
{
    CHECK(sym(a_n(2), {1, 0}, {0, 1}) == -1);
    CHECK(sym(kronecker(), {1, 1}, {1, 1}) == 0);
    CHECK(sym_with_unit(kronecker(), std::vector<std::int64_t>{1, 1}, 0) == 0);
    CHECK(sym_with_unit(a_n(2), std::vector<std::int64_t>{1, 1}, 0) == 1);
}

TEST_CASE("weight pairing is exact")
{
    Weight l1(std::vector<Rational>{1, -1});
    CHECK(pair(l1, {2, 2}) == 0);
    Weight l2(std::vector<Rational>{parse_rational("1/2"), parse_rational("-1/3")});
    CHECK(pair(l2, {2, 3}) == 0);
    CHECK(pair(l2, {1, 0}) == Rational(1, 2));
    CHECK(pair(Weight::zero(3), {4, 5, 6}) == 0);
    CHECK_THROWS_AS(pair(l1, {1}), PreconditionError);
}

TEST_CASE("support connectivity")
{
    auto path = a_n(3);
    CHECK_FALSE(support_connected(path, {1, 0, 1}));
    CHECK(support_connected(path, {1, 1, 1}));
    CHECK(support_connected(loops(3), {5}));
    CHECK_THROWS_AS(support_connected(path, {0, 0, 0}), PreconditionError);
}

TEST_CASE("forms: bilinearity, symmetry, reversal, loops")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 1 + trial % 4;
        auto q = random_quiver(rng, k);
        auto a = random_vector(rng, k, 4), a2 = random_vector(rng, k, 4), b = random_vector(rng, k, 4);
        CHECK(euler(q, a + a2, b) == euler(q, a, b) + euler(q, a2, b));
        CHECK(euler(q, a, b) == euler_by_matrix(q, a, b));
        CHECK(sym(q, a, b) == sym(q, b, a));
        CHECK(sym(q, a, b) == sym(q.reversed(), a, b));
        for (std::size_t v = 0; v < k; ++v) {
            CHECK(p(q, DimVector::unit(k, v)) == q.loops(v));
            CHECK(sym_with_unit(q, a.entries(), v) == sym(q, a, DimVector::unit(k, v)));
        }
        std::vector<Rational> w(k);
        for (std::size_t i = 0; i < k; ++i)
            w[i] = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
        Weight l(w);
        CHECK(pair(l, a + a2) == pair(l, a) + pair(l, a2));
    }
}

TEST_CASE("dimension vectors are capped and overflow-checked")
{
    CHECK_NOTHROW(DimVector{kEntryCap});
    CHECK_THROWS_AS(DimVector{kEntryCap + 1}, OverflowError);
    CHECK_THROWS_AS(DimVector{-1}, PreconditionError);
    DimVector big{kEntryCap};
    CHECK_THROWS_AS(big + DimVector{1}, OverflowError);
    CHECK_THROWS_AS(checked::mul(std::int64_t{1} << 40, std::int64_t{1} << 30), OverflowError);
    Quiver heavy(1, {std::int64_t{1} << 40});
    CHECK_THROWS_AS(p(heavy, {kEntryCap}), OverflowError);
}

TEST_CASE("canonical order")
{
    CHECK(graded_less({1, 0}, {0, 1}));
    CHECK(graded_less({0, 1}, {2, 0}));
    CHECK(graded_less({2, 0}, {1, 1}));
    CHECK_FALSE(graded_less({1, 1}, {1, 1}));
}

TEST_CASE("box indexing subtracts")
{
    Box box({3, 2, 4});
    CHECK(box.size() == 60);
    for (std::size_t i = 0; i < box.size(); ++i)
        CHECK(box.index(box.at(i)) == i);
    DimVector a{3, 1, 4}, b{1, 1, 2};
    CHECK(box.index(a - b) == box.index(a) - box.index(b));
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(parse_rational("+5/10") == Rational(1, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}
