#pragma once

#include "sigma_roots/quiver.hpp"

#include <optional>
#include <vector>

// Brute-force reference implementations. Slow on purpose; they share no
// search code with the roots and sigma modules.
namespace sigma_roots::oracle {

inline constexpr std::int64_t kBruteTotalCap = 12;

/// Positive real roots in the box: the orbit of the loop-free vertex simples
/// under loop-free reflections, restricted to nonnegative vectors in the box.
std::vector<DimVector> weyl_real_roots(const Quiver& q, const DimVector& bound);

/// Positive imaginary roots in the box: fundamental-region vectors of the box
/// closed under loop-free reflections that stay nonnegative and inside it.
std::vector<DimVector> weyl_imaginary_roots(const Quiver& q, const DimVector& bound);

/// Every multiset of eligible roots (Weyl-orbit roots with l.b == 0) summing
/// to a, parts in canonical order. Throws PreconditionError if sum(a) > 12.
std::vector<std::vector<DimVector>> brute_decompositions(const Quiver& q, const Weight& l, const DimVector& a);

/// max of sum p(b_i) over brute_decompositions, optionally only r >= 2.
std::optional<std::int64_t> brute_max_decomp_sum(const Quiver& q, const Weight& l, const DimVector& a,
                                                 bool proper_only = false);

/// Membership by the criterion evaluated over brute_decompositions.
bool brute_in_sigma(const Quiver& q, const Weight& l, const DimVector& a);

} // namespace sigma_roots::oracle
