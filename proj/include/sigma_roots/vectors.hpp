#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sigma_roots {

/// Largest admissible entry of a dimension vector.
inline constexpr std::int64_t kEntryCap = std::int64_t{1} << 20;

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
} // namespace checked

/// Nonnegative integer vector indexed by the vertices of a quiver (0-based).
/// Every entry lies in [0, kEntryCap]; mutation goes through checks.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t k);
    DimVector(std::initializer_list<std::int64_t> entries);
    explicit DimVector(std::vector<std::int64_t> entries);

    /// The vertex simple at v.
    static DimVector unit(std::size_t k, std::size_t v);

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::span<const std::int64_t> entries() const { return entries_; }
    void set(std::size_t i, std::int64_t value);

    std::int64_t total() const;
    bool is_zero() const;
    /// Index of the single nonzero entry if this is a vertex simple, else size().
    std::size_t unit_vertex() const;

    /// Coordinatewise comparison.
    bool leq(const DimVector& other) const;

    DimVector scaled(std::int64_t n) const;

    friend DimVector operator+(const DimVector& a, const DimVector& b);
    /// Requires b <= a coordinatewise.
    friend DimVector operator-(const DimVector& a, const DimVector& b);

    bool operator==(const DimVector&) const = default;
    /// Plain lexicographic order, for use as a map key.
    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

/// Canonical order used for every listing: total dimension first, then
/// lexicographically descending (so e_1 precedes e_2).
bool graded_less(const DimVector& a, const DimVector& b);

struct GradedLess {
    bool operator()(const DimVector& a, const DimVector& b) const { return graded_less(a, b); }
};

std::string to_string(const DimVector& v);

/// Integer vector that may leave the positive cone (intermediate of Weyl moves).
class SignedVector {
public:
    SignedVector() = default;
    explicit SignedVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
    explicit SignedVector(const DimVector& v);

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t& operator[](std::size_t i) { return entries_[i]; }
    std::span<const std::int64_t> entries() const { return entries_; }

    bool nonnegative() const;
    /// Throws PreconditionError if an entry is negative or above the cap.
    DimVector to_dim() const;

    bool operator==(const SignedVector&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

std::string to_string(const SignedVector& v);

/// The box [0, bound] with a mixed-radix index. For b <= a inside the box,
/// index(a - b) == index(a) - index(b), which the DP relies on.
class Box {
public:
    explicit Box(DimVector bound);

    const DimVector& bound() const { return bound_; }
    std::size_t size() const { return size_; }
    std::size_t index(const DimVector& v) const;
    DimVector at(std::size_t index) const;
    bool contains(const DimVector& v) const;

    /// All nonzero vectors of the box in canonical order.
    std::vector<DimVector> nonzero_sorted() const;

private:
    DimVector bound_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 1;
};

/// Refuse boxes with more than this many points.
inline constexpr std::size_t kMaxBoxSize = 20'000'000;

} // namespace sigma_roots
