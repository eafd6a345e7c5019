#pragma once

#include "sigma_roots/quiver.hpp"
#include "sigma_roots/roots.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace sigma_roots {

enum class SigmaReason { NotPositiveRoot, WeightPairingNonzero, BlockedByDecomposition, Member };

std::string_view to_string(SigmaReason r);

/// Outcome of the membership test for the set of simple dimension vectors.
/// `witness` is filled only for BlockedByDecomposition: at least two parts,
/// each an eligible root, summing to the target, with total p >= p(target).
struct SigmaVerdict {
    bool member = false;
    SigmaReason reason = SigmaReason::NotPositiveRoot;
    std::vector<DimVector> witness;
};

/// Memoized criterion over the box [0, bound] for a fixed (q, l).
///
/// A root b is eligible when l.b == 0. For every box vector a the solver
/// stores M(a), the maximum of sum p(b_i) over decompositions a = b_1 + ...
/// + b_r (r >= 1) into eligible roots, and the same maximum restricted to
/// r >= 2. Both tables are filled in mixed-radix order at construction,
/// after which the solver is immutable and safe to share between threads.
///
/// Decompositions are reached once per ordering of their parts; only the
/// maximum is kept, so the repetition is harmless.
class SigmaSolver {
public:
    SigmaSolver(Quiver q, Weight l, DimVector bound, unsigned threads = 1);

    const Quiver& quiver() const { return q_; }
    const Weight& weight() const { return l_; }
    const Box& box() const { return box_; }

    RootClass root_class(const DimVector& a) const;
    /// Eligible roots of the box in canonical order.
    const std::vector<DimVector>& eligible_roots() const { return eligible_; }

    /// M(a), or nullopt when a has no decomposition into eligible roots.
    std::optional<std::int64_t> max_decomp_sum(const DimVector& a) const;
    /// Best total over decompositions with at least two parts.
    std::optional<std::int64_t> max_proper_decomp_sum(const DimVector& a) const;

    SigmaVerdict verdict(const DimVector& a) const;
    bool member(const DimVector& a) const;
    /// Members of the box in canonical order.
    std::vector<DimVector> members() const;

private:
    std::vector<DimVector> reconstruct(const DimVector& a, bool proper) const;
    std::size_t checked_index(const DimVector& a) const;

    Quiver q_;
    Weight l_;
    Box box_;
    std::vector<RootClass> classes_;
    std::vector<DimVector> eligible_;
    std::vector<std::size_t> eligible_index_;
    std::vector<std::int64_t> eligible_p_;
    std::vector<std::optional<std::int64_t>> best_;
    std::vector<std::optional<std::int64_t>> best_proper_;
};

/// Positive roots b <= bound with l.b == 0 exactly, canonical order.
std::vector<DimVector> roots_lambda(const Quiver& q, const Weight& l, const DimVector& bound);
std::optional<std::int64_t> max_decomp_sum(const Quiver& q, const Weight& l, const DimVector& a);
SigmaVerdict in_sigma(const Quiver& q, const Weight& l, const DimVector& a);
std::vector<DimVector> sigma_upto(const Quiver& q, const Weight& l, const DimVector& bound, unsigned threads = 1);

} // namespace sigma_roots
