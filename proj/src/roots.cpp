#include "sigma_roots/roots.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace sigma_roots {

std::string_view to_string(RootClass c)
{
    switch (c) {
    case RootClass::NotRoot: return "not-root";
    case RootClass::RealRoot: return "real";
    case RootClass::ImaginaryRoot: return "imaginary";
    }
    return "?";
}

SignedVector reflect(const Quiver& q, const SignedVector& a, std::size_t v)
{
    if (a.size() != q.vertices())
        throw PreconditionError("dimension vector length mismatch");
    if (v >= q.vertices())
        throw PreconditionError("vertex index out of range");
    if (q.loops(v) != 0)
        throw PreconditionError("reflection undefined at a vertex with loops");
    SignedVector r = a;
    r[v] = checked::sub(a[v], sym_with_unit(q, a.entries(), v));
    return r;
}

SignedVector reflect(const Quiver& q, const DimVector& a, std::size_t v) { return reflect(q, SignedVector(a), v); }

bool in_fundamental_region(const Quiver& q, const DimVector& a)
{
    if (a.is_zero())
        throw PreconditionError("in_fundamental_region: zero vector");
    if (!support_connected(q, a))
        return false;
    for (std::size_t v = 0; v < q.vertices(); ++v)
        if (q.loops(v) == 0 && sym_with_unit(q, a.entries(), v) > 0)
            return false;
    return true;
}

RootClass classify_root(const Quiver& q, const DimVector& start)
{
    if (start.size() != q.vertices())
        throw PreconditionError("dimension vector length mismatch");
    if (start.is_zero())
        throw PreconditionError("classify_root: zero vector");
    DimVector a = start;
    for (;;) {
        if (!support_connected(q, a))
            return RootClass::NotRoot;
        if (auto u = a.unit_vertex(); u < a.size())
            return q.loops(u) == 0 ? RootClass::RealRoot : RootClass::ImaginaryRoot;
        std::size_t pivot = q.vertices();
        for (std::size_t v = 0; v < q.vertices(); ++v)
            if (q.loops(v) == 0 && sym_with_unit(q, a.entries(), v) > 0) {
                pivot = v;
                break;
            }
        if (pivot == q.vertices())
            return RootClass::ImaginaryRoot; // fundamental region
        auto next = reflect(q, a, pivot);
        if (!next.nonnegative())
            return RootClass::NotRoot;
        a = next.to_dim();
        if (a.is_zero())
            return RootClass::NotRoot;
    }
}

std::vector<RootClass> classify_box(const Quiver& q, const Box& box, unsigned threads)
{
    if (box.bound().size() != q.vertices())
        throw PreconditionError("bound length does not match the quiver");
    std::vector<RootClass> classes(box.size(), RootClass::NotRoot);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = std::max<std::size_t>(begin, 1); i < end; ++i)
            classes[i] = classify_root(q, box.at(i));
    };
    threads = std::clamp(threads, 1u, 64u);
    if (threads == 1 || box.size() < 4096) {
        work(0, box.size());
        return classes;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    const std::size_t chunk = (box.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        auto begin = t * chunk, end = std::min(box.size(), begin + chunk);
        if (begin < end)
            pool.emplace_back([&, t, begin, end] {
                try {
                    work(begin, end);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
    }
    for (auto& th : pool)
        th.join();
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);
    return classes;
}

std::vector<ClassifiedRoot> positive_roots_upto(const Quiver& q, const DimVector& bound, unsigned threads)
{
    Box box(bound);
    auto classes = classify_box(q, box, threads);
    std::vector<ClassifiedRoot> roots;
    for (std::size_t i = 1; i < box.size(); ++i)
        if (classes[i] != RootClass::NotRoot)
            roots.push_back({box.at(i), classes[i]});
    std::sort(roots.begin(), roots.end(),
              [](const ClassifiedRoot& x, const ClassifiedRoot& y) { return graded_less(x.root, y.root); });
    return roots;
}

} // namespace sigma_roots
