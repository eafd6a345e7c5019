#pragma once

#include "sigma_roots/quiver.hpp"
#include "sigma_roots/sigma.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sigma_roots {

/// Undirected multigraph with loop counts held apart from the symmetric
/// edge matrix (whose diagonal is unused).
class UGraph {
public:
    explicit UGraph(std::size_t vertices = 0);

    std::size_t vertices() const { return n_; }
    std::int64_t edges(std::size_t i, std::size_t j) const { return i == j ? 0 : edges_[i * n_ + j]; }
    std::int64_t loops(std::size_t v) const { return loops_[v]; }
    /// Sum of non-loop edge multiplicities at v.
    std::int64_t degree(std::size_t v) const;
    /// Number of distinct non-loop neighbours of v.
    std::size_t neighbours(std::size_t v) const;

    void set_edges(std::size_t i, std::size_t j, std::int64_t m);
    void set_loops(std::size_t v, std::int64_t m);

    bool operator==(const UGraph&) const = default;

private:
    std::size_t n_;
    std::vector<std::int64_t> edges_;
    std::vector<std::int64_t> loops_;
};

/// Underlying graph of a quiver: arrows in either direction become edges.
UGraph underlying_graph(const Quiver& q);

struct RepPart {
    std::int64_t multiplicity;
    DimVector dim;
    bool operator==(const RepPart&) const = default;
};

/// A representation type (d_1, b_1; ...; d_l, b_l). Enumerated types have
/// pairwise distinct b_i sorted canonically; refined types may repeat them.
struct RepType {
    std::vector<RepPart> parts;

    DimVector total() const;
    /// The multiplicity vector (d_1, ..., d_l).
    DimVector multiplicities() const;
    std::vector<DimVector> dims() const;
    bool operator==(const RepType&) const = default;
};

std::string to_string(const RepType& t);

/// dim Ext^1 between non-isomorphic simples of the undeformed algebra:
/// -sym(b, c).
std::int64_t ext_dim(const Quiver& q, const DimVector& b, const DimVector& c);

/// G_B: 2 p(b_i) loops at w_i and -sym(b_i, b_j) edges between w_i, w_j.
/// Throws PreconditionError if any count comes out negative.
UGraph local_graph(const Quiver& q, std::span<const DimVector> family);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All non-trivial representation types of a with parts in the solver's
/// member set. The solver box must contain a. Throws BudgetExceeded after
/// `budget` search nodes.
std::vector<RepType> rep_types(const SigmaSolver& solver, const DimVector& a, std::uint64_t budget = kDefaultBudget);
std::vector<RepType> rep_types(const Quiver& q, const Weight& l, const DimVector& a,
                               std::uint64_t budget = kDefaultBudget);

/// Parts with p(b) > threshold are split into d copies of (1, b); others kept.
/// The default threshold 0 is the "infinitely many simples" reading; 1 is the
/// literal strict bound.
RepType refine_type(const Quiver& q, const RepType& t, int threshold = 0);

} // namespace sigma_roots
