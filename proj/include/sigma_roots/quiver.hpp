#pragma once

#include "sigma_roots/rational.hpp"
#include "sigma_roots/vectors.hpp"

#include <cstdint>
#include <vector>

namespace sigma_roots {

/// Finite quiver stored as its arrow-multiplicity matrix. Entry (i, j) counts
/// arrows i -> j; the diagonal holds loop counts. Only the numerics of the
/// double quiver are ever needed, so it is not stored.
class Quiver {
public:
    explicit Quiver(std::size_t vertices);
    /// Row-major k*k matrix of nonnegative multiplicities.
    Quiver(std::size_t vertices, std::vector<std::int64_t> arrows);

    std::size_t vertices() const { return k_; }
    std::int64_t arrows(std::size_t from, std::size_t to) const { return arrows_[from * k_ + to]; }
    std::int64_t loops(std::size_t v) const { return arrows(v, v); }
    /// Number of edges between distinct i and j in the underlying graph.
    std::int64_t edge_multiplicity(std::size_t i, std::size_t j) const;

    /// Same vertices, every arrow reversed.
    Quiver reversed() const;

    bool operator==(const Quiver&) const = default;

private:
    std::size_t k_;
    std::vector<std::int64_t> arrows_;
};

/// The deformation parameter: one exact rational per vertex.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    static Weight zero(std::size_t k) { return Weight(std::vector<Rational>(k)); }

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    bool is_zero() const;

private:
    std::vector<Rational> entries_;
};

std::string to_string(const Weight& w);

/// Euler form: sum_i a_i b_i - sum_{i,j} arrows(i,j) a_i b_j.
std::int64_t euler(const Quiver& q, const DimVector& a, const DimVector& b);
/// 1 - euler(a, a).
std::int64_t p(const Quiver& q, const DimVector& a);
/// euler(a, b) + euler(b, a); depends only on the underlying graph.
std::int64_t sym(const Quiver& q, const DimVector& a, const DimVector& b);
/// sym(a, e_v) without building the unit vector. Works on signed vectors.
std::int64_t sym_with_unit(const Quiver& q, std::span<const std::int64_t> a, std::size_t v);
/// Exact pairing sum_i l_i a_i.
Rational pair(const Weight& l, const DimVector& a);

/// True iff the vertices where a is positive induce a connected subgraph of
/// the underlying graph. Loops are ignored.
bool support_connected(const Quiver& q, const DimVector& a);

} // namespace sigma_roots
