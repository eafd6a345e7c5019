#pragma once

#include "sigma_roots/quiver.hpp"

#include <string_view>
#include <vector>

namespace sigma_roots {

enum class RootClass { NotRoot, RealRoot, ImaginaryRoot };

std::string_view to_string(RootClass c);

/// Simple reflection s_v(a) = a - sym(a, e_v) e_v. Throws PreconditionError
/// if v carries a loop.
SignedVector reflect(const Quiver& q, const SignedVector& a, std::size_t v);
SignedVector reflect(const Quiver& q, const DimVector& a, std::size_t v);

/// Kac fundamental region: connected support and sym(a, e_v) <= 0 at every
/// loop-free vertex v.
bool in_fundamental_region(const Quiver& q, const DimVector& a);

/// Positive-root test by Weyl descent. At each step the smallest loop-free v
/// with sym(a, e_v) > 0 is reflected; the coordinate sum strictly drops.
RootClass classify_root(const Quiver& q, const DimVector& a);

struct ClassifiedRoot {
    DimVector root;
    RootClass kind;
    bool operator==(const ClassifiedRoot&) const = default;
};

/// Class of every vector in [0, bound], indexed as Box(bound). Index 0 (the
/// zero vector) is NotRoot. `threads` splits the box; the result does not
/// depend on it.
std::vector<RootClass> classify_box(const Quiver& q, const Box& box, unsigned threads = 1);

/// All positive roots 0 < b <= bound in canonical order.
std::vector<ClassifiedRoot> positive_roots_upto(const Quiver& q, const DimVector& bound, unsigned threads = 1);

} // namespace sigma_roots
