#include "sigma_roots/sigma.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sigma_roots {

std::string_view to_string(SigmaReason r)
{
    switch (r) {
    case SigmaReason::NotPositiveRoot: return "not-positive-root";
    case SigmaReason::WeightPairingNonzero: return "weight-pairing-nonzero";
    case SigmaReason::BlockedByDecomposition: return "blocked-by-decomposition";
    case SigmaReason::Member: return "member";
    }
    return "?";
}

SigmaSolver::SigmaSolver(Quiver q, Weight l, DimVector bound, unsigned threads)
    : q_(std::move(q)), l_(std::move(l)), box_(std::move(bound))
{
    if (l_.size() != q_.vertices())
        throw PreconditionError("weight length does not match the quiver");
    classes_ = classify_box(q_, box_, threads);

    for (std::size_t i = 1; i < box_.size(); ++i) {
        if (classes_[i] == RootClass::NotRoot)
            continue;
        auto b = box_.at(i);
        if (pair(l_, b) == 0)
            eligible_.push_back(std::move(b));
    }
    std::sort(eligible_.begin(), eligible_.end(), graded_less);
    for (const auto& b : eligible_) {
        eligible_index_.push_back(box_.index(b));
        eligible_p_.push_back(p(q_, b));
    }

    // Sub-vectors of a have smaller mixed-radix index, so one ascending pass suffices.
    best_.assign(box_.size(), std::nullopt);
    best_proper_.assign(box_.size(), std::nullopt);
    const auto k = q_.vertices();
    for (std::size_t idx = 1; idx < box_.size(); ++idx) {
        auto a = box_.at(idx);
        std::optional<std::int64_t> whole, proper;
        for (std::size_t r = 0; r < eligible_.size(); ++r) {
            const auto& b = eligible_[r];
            bool fits = true;
            for (std::size_t v = 0; v < k && fits; ++v)
                fits = b[v] <= a[v];
            if (!fits)
                continue;
            auto bi = eligible_index_[r];
            if (bi == idx) {
                whole = eligible_p_[r];
                continue;
            }
            const auto& rest = best_[idx - bi];
            if (!rest)
                continue;
            auto candidate = checked::add(eligible_p_[r], *rest);
            if (!proper || candidate > *proper)
                proper = candidate;
        }
        best_proper_[idx] = proper;
        if (whole && (!proper || *whole > *proper))
            best_[idx] = whole;
        else
            best_[idx] = proper;
    }
}

std::size_t SigmaSolver::checked_index(const DimVector& a) const
{
    if (a.size() != q_.vertices())
        throw PreconditionError("dimension vector length mismatch");
    if (a.is_zero())
        throw PreconditionError("zero dimension vector");
    if (!box_.contains(a))
        throw PreconditionError("vector " + to_string(a) + " lies outside the solver box " + to_string(box_.bound()));
    return box_.index(a);
}

RootClass SigmaSolver::root_class(const DimVector& a) const { return classes_[checked_index(a)]; }

std::optional<std::int64_t> SigmaSolver::max_decomp_sum(const DimVector& a) const { return best_[checked_index(a)]; }

std::optional<std::int64_t> SigmaSolver::max_proper_decomp_sum(const DimVector& a) const
{
    return best_proper_[checked_index(a)];
}

std::vector<DimVector> SigmaSolver::reconstruct(const DimVector& target, bool proper) const
{
    std::vector<DimVector> parts;
    auto idx = box_.index(target);
    auto goal = proper ? *best_proper_[idx] : *best_[idx];
    bool first = true;
    for (;;) {
        bool advanced = false;
        for (std::size_t r = 0; r < eligible_.size(); ++r) {
            auto bi = eligible_index_[r];
            if (bi > idx || !eligible_[r].leq(box_.at(idx)))
                continue;
            if (bi == idx) {
                if (first && proper)
                    continue;
                if (eligible_p_[r] == goal) {
                    parts.push_back(eligible_[r]);
                    std::sort(parts.begin(), parts.end(), graded_less);
                    return parts;
                }
                continue;
            }
            const auto& rest = best_[idx - bi];
            if (rest && eligible_p_[r] + *rest == goal) {
                parts.push_back(eligible_[r]);
                idx -= bi;
                goal = *rest;
                advanced = true;
                break;
            }
        }
        first = false;
        if (!advanced)
            throw std::logic_error("decomposition table is inconsistent");
    }
}

SigmaVerdict SigmaSolver::verdict(const DimVector& a) const
{
    auto idx = checked_index(a);
    SigmaVerdict v;
    if (classes_[idx] == RootClass::NotRoot) {
        v.reason = SigmaReason::NotPositiveRoot;
        return v;
    }
    if (pair(l_, a) != 0) {
        v.reason = SigmaReason::WeightPairingNonzero;
        return v;
    }
    const auto& proper = best_proper_[idx];
    if (proper && *proper >= p(q_, a)) {
        v.reason = SigmaReason::BlockedByDecomposition;
        v.witness = reconstruct(a, true);
        return v;
    }
    v.member = true;
    v.reason = SigmaReason::Member;
    return v;
}

bool SigmaSolver::member(const DimVector& a) const
{
    auto idx = checked_index(a);
    if (classes_[idx] == RootClass::NotRoot || pair(l_, a) != 0)
        return false;
    const auto& proper = best_proper_[idx];
    return !(proper && *proper >= p(q_, a));
}

std::vector<DimVector> SigmaSolver::members() const
{
    std::vector<DimVector> r;
    for (const auto& b : eligible_)
        if (member(b))
            r.push_back(b);
    return r;
}

std::vector<DimVector> roots_lambda(const Quiver& q, const Weight& l, const DimVector& bound)
{
    if (l.size() != q.vertices())
        throw PreconditionError("weight length does not match the quiver");
    std::vector<DimVector> r;
    for (auto& root : positive_roots_upto(q, bound))
        if (pair(l, root.root) == 0)
            r.push_back(std::move(root.root));
    return r;
}

std::optional<std::int64_t> max_decomp_sum(const Quiver& q, const Weight& l, const DimVector& a)
{
    return SigmaSolver(q, l, a).max_decomp_sum(a);
}

SigmaVerdict in_sigma(const Quiver& q, const Weight& l, const DimVector& a)
{
    if (a.size() == q.vertices() && a.is_zero())
        throw PreconditionError("in_sigma: zero vector");
    return SigmaSolver(q, l, a).verdict(a);
}

std::vector<DimVector> sigma_upto(const Quiver& q, const Weight& l, const DimVector& bound, unsigned threads)
{
    return SigmaSolver(q, l, bound, threads).members();
}

} // namespace sigma_roots
