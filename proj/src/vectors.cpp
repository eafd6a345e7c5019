#include "sigma_roots/vectors.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sigma_roots {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace checked

namespace {

void check_entry(std::int64_t value)
{
    if (value < 0)
        throw PreconditionError("dimension vector entry is negative");
    if (value > kEntryCap)
        throw OverflowError("dimension vector entry exceeds the cap 2^20");
}

} // namespace

DimVector::DimVector(std::size_t k) : entries_(k, 0) {}

DimVector::DimVector(std::initializer_list<std::int64_t> entries) : entries_(entries)
{
    std::for_each(entries_.begin(), entries_.end(), check_entry);
}

DimVector::DimVector(std::vector<std::int64_t> entries) : entries_(std::move(entries))
{
    std::for_each(entries_.begin(), entries_.end(), check_entry);
}

DimVector DimVector::unit(std::size_t k, std::size_t v)
{
    if (v >= k)
        throw PreconditionError("vertex index out of range");
    DimVector r(k);
    r.entries_[v] = 1;
    return r;
}

void DimVector::set(std::size_t i, std::int64_t value)
{
    check_entry(value);
    entries_.at(i) = value;
}

std::int64_t DimVector::total() const
{
    std::int64_t s = 0;
    for (auto e : entries_)
        s = checked::add(s, e);
    return s;
}

bool DimVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

std::size_t DimVector::unit_vertex() const
{
    std::size_t found = size();
    for (std::size_t i = 0; i < size(); ++i) {
        if (entries_[i] == 0)
            continue;
        if (entries_[i] != 1 || found != size())
            return size();
        found = i;
    }
    return found;
}

bool DimVector::leq(const DimVector& other) const
{
    if (size() != other.size())
        throw PreconditionError("dimension vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

DimVector DimVector::scaled(std::int64_t n) const
{
    std::vector<std::int64_t> r(entries_);
    for (auto& e : r)
        e = checked::mul(e, n);
    return DimVector(std::move(r));
}

DimVector operator+(const DimVector& a, const DimVector& b)
{
    if (a.size() != b.size())
        throw PreconditionError("dimension vector length mismatch");
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked::add(a[i], b[i]);
    return DimVector(std::move(r));
}

DimVector operator-(const DimVector& a, const DimVector& b)
{
    if (a.size() != b.size())
        throw PreconditionError("dimension vector length mismatch");
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return DimVector(std::move(r));
}

bool graded_less(const DimVector& a, const DimVector& b)
{
    auto ta = a.total(), tb = b.total();
    if (ta != tb)
        return ta < tb;
    return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                        a.entries().begin(), a.entries().end());
}

namespace {

std::string join(std::span<const std::int64_t> xs)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << ')';
    return os.str();
}

} // namespace

std::string to_string(const DimVector& v) { return join(v.entries()); }
std::string to_string(const SignedVector& v) { return join(v.entries()); }

SignedVector::SignedVector(const DimVector& v) : entries_(v.entries().begin(), v.entries().end()) {}

bool SignedVector::nonnegative() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e >= 0; });
}

DimVector SignedVector::to_dim() const { return DimVector(entries_); }

Box::Box(DimVector bound) : bound_(std::move(bound)), stride_(bound_.size())
{
    // last vertex varies fastest
    for (std::size_t i = bound_.size(); i-- > 0;) {
        stride_[i] = size_;
        auto extent = static_cast<std::size_t>(bound_[i]) + 1;
        if (size_ > kMaxBoxSize / extent)
            throw PreconditionError("bound box is too large (more than 2*10^7 points)");
        size_ *= extent;
    }
}

std::size_t Box::index(const DimVector& v) const
{
    if (v.size() != bound_.size())
        throw PreconditionError("dimension vector length mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > bound_[i])
            throw PreconditionError("vector outside the bound box");
        idx += static_cast<std::size_t>(v[i]) * stride_[i];
    }
    return idx;
}

DimVector Box::at(std::size_t index) const
{
    std::vector<std::int64_t> r(bound_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = static_cast<std::int64_t>(index / stride_[i]);
        index %= stride_[i];
    }
    return DimVector(std::move(r));
}

bool Box::contains(const DimVector& v) const { return v.size() == bound_.size() && v.leq(bound_); }

std::vector<DimVector> Box::nonzero_sorted() const
{
    std::vector<DimVector> r;
    r.reserve(size_ > 0 ? size_ - 1 : 0);
    for (std::size_t i = 1; i < size_; ++i)
        r.push_back(at(i));
    std::sort(r.begin(), r.end(), graded_less);
    return r;
}

} // namespace sigma_roots
