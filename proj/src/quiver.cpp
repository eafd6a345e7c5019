#include "sigma_roots/quiver.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sigma_roots {

namespace {

void require_length(const Quiver& q, const DimVector& a)
{
    if (a.size() != q.vertices())
        throw PreconditionError("dimension vector length " + std::to_string(a.size()) +
                                " does not match the quiver's " + std::to_string(q.vertices()) +
                                " vertices");
}

} // namespace

Quiver::Quiver(std::size_t vertices) : Quiver(vertices, std::vector<std::int64_t>(vertices * vertices, 0)) {}

Quiver::Quiver(std::size_t vertices, std::vector<std::int64_t> arrows) : k_(vertices), arrows_(std::move(arrows))
{
    if (k_ == 0)
        throw PreconditionError("a quiver needs at least one vertex");
    if (arrows_.size() != k_ * k_)
        throw PreconditionError("arrow matrix must be k*k");
    if (std::any_of(arrows_.begin(), arrows_.end(), [](auto m) { return m < 0; }))
        throw PreconditionError("arrow multiplicities must be nonnegative");
}

std::int64_t Quiver::edge_multiplicity(std::size_t i, std::size_t j) const
{
    return i == j ? 0 : checked::add(arrows(i, j), arrows(j, i));
}

Quiver Quiver::reversed() const
{
    std::vector<std::int64_t> r(arrows_.size());
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j)
            r[j * k_ + i] = arrows(i, j);
    return Quiver(k_, std::move(r));
}

bool Weight::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == 0; });
}

std::string to_string(const Weight& w)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << to_string(w[i]);
    os << ')';
    return os.str();
}

std::int64_t euler(const Quiver& q, const DimVector& a, const DimVector& b)
{
    require_length(q, a);
    require_length(q, b);
    const auto k = q.vertices();
    std::int64_t r = 0;
    for (std::size_t i = 0; i < k; ++i) {
        r = checked::add(r, checked::mul(a[i], b[i]));
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < k; ++j) {
            auto m = q.arrows(i, j);
            if (m != 0 && b[j] != 0)
                r = checked::sub(r, checked::mul(m, checked::mul(a[i], b[j])));
        }
    }
    return r;
}

std::int64_t p(const Quiver& q, const DimVector& a) { return checked::sub(1, euler(q, a, a)); }

std::int64_t sym(const Quiver& q, const DimVector& a, const DimVector& b)
{
    return checked::add(euler(q, a, b), euler(q, b, a));
}

std::int64_t sym_with_unit(const Quiver& q, std::span<const std::int64_t> a, std::size_t v)
{
    if (a.size() != q.vertices() || v >= q.vertices())
        throw PreconditionError("dimension vector length mismatch");
    // euler(a, e_v) + euler(e_v, a) = 2 a_v - sum_w (arrows(w,v) + arrows(v,w)) a_w
    std::int64_t r = checked::mul(2, a[v]);
    for (std::size_t w = 0; w < q.vertices(); ++w) {
        auto m = checked::add(q.arrows(w, v), q.arrows(v, w));
        if (m != 0 && a[w] != 0)
            r = checked::sub(r, checked::mul(m, a[w]));
    }
    return r;
}

Rational pair(const Weight& l, const DimVector& a)
{
    if (l.size() != a.size())
        throw PreconditionError("weight length does not match the dimension vector");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            r += l[i] * a[i];
    return r;
}

bool support_connected(const Quiver& q, const DimVector& a)
{
    require_length(q, a);
    if (a.is_zero())
        throw PreconditionError("support_connected: zero vector");
    const auto k = q.vertices();
    std::vector<char> seen(k, 0);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < k; ++v)
        if (a[v] > 0) {
            stack.push_back(v);
            seen[v] = 1;
            break;
        }
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t w = 0; w < k; ++w)
            if (!seen[w] && a[w] > 0 && q.edge_multiplicity(v, w) > 0) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    auto support = static_cast<std::size_t>(std::count_if(a.entries().begin(), a.entries().end(),
                                                          [](auto e) { return e > 0; }));
    return reached == support;
}

} // namespace sigma_roots
