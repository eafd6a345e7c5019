#include "sigma_roots/errors.hpp"
#include "sigma_roots/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace sigma_roots;
using namespace sigma_roots::testing;

TEST_CASE("weyl orbit roots")
{
    auto real = oracle::weyl_real_roots(a_n(3), {1, 1, 1});
    CHECK(real.size() == 6);
    CHECK(oracle::weyl_imaginary_roots(a_n(3), {2, 2, 2}).empty());

    CHECK(oracle::weyl_real_roots(kronecker(), {3, 3}) ==
          std::vector<DimVector>{{1, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}});
    CHECK(oracle::weyl_imaginary_roots(kronecker(), {3, 3}) == std::vector<DimVector>{{1, 1}, {2, 2}, {3, 3}});

    CHECK(oracle::weyl_real_roots(jordan(), {4}).empty());
    CHECK(oracle::weyl_imaginary_roots(jordan(), {4}) == std::vector<DimVector>{{1}, {2}, {3}, {4}});
}

TEST_CASE("brute decompositions")
{
    auto d = oracle::brute_decompositions(a_n(2), Weight::zero(2), {1, 1});
    std::set<std::vector<DimVector>> got(d.begin(), d.end());
    CHECK(got == std::set<std::vector<DimVector>>{{{1, 1}}, {{1, 0}, {0, 1}}});
    CHECK(got.size() == d.size());

    // partitions of 2 into parts from {1, 2}
    CHECK(oracle::brute_decompositions(jordan(), Weight::zero(1), {2}).size() == 2);
    CHECK(oracle::brute_decompositions(jordan(), Weight::zero(1), {5}).size() == 7);

    Weight l(std::vector<Rational>{1, 0});
    auto only = oracle::brute_decompositions(a_n(2), l, {1, 1});
    CHECK(only.empty());
    CHECK_FALSE(oracle::brute_max_decomp_sum(a_n(2), l, {1, 1}));
    CHECK(oracle::brute_max_decomp_sum(a_n(2), Weight::zero(2), {1, 1}, true) == 0);
    CHECK_FALSE(oracle::brute_max_decomp_sum(a_n(2), Weight::zero(2), {1, 0}, true));

    CHECK_THROWS_AS(oracle::brute_decompositions(jordan(), Weight::zero(1), {13}), PreconditionError);
}

TEST_CASE("brute membership")
{
    CHECK(oracle::brute_in_sigma(jordan(), Weight::zero(1), {1}));
    CHECK_FALSE(oracle::brute_in_sigma(jordan(), Weight::zero(1), {2}));
    CHECK(oracle::brute_in_sigma(loops(2), Weight::zero(1), {3}));
    CHECK_FALSE(oracle::brute_in_sigma(a_n(2), Weight::zero(2), {1, 1}));
    CHECK(oracle::brute_in_sigma(a_n(2), Weight(std::vector<Rational>{1, -1}), {1, 1}));
}
