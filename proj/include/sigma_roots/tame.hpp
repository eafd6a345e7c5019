#pragma once

#include "sigma_roots/local.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sigma_roots {

enum class TameFamily { A, D, E6, E7, E8 };

/// An extended Dynkin diagram with its minimal imaginary root.
///
/// Vertex layouts (0-based):
///   A~m  cycle 0-1-...-m-0; A~1 is a double edge.
///   D~m  leaves 0,1 on spine vertex 2, spine 2..m-2, leaves m-1,m on m-2.
///   E~6  path 0-1-2-3-4, arm 2-5-6.
///   E~7  path 0-...-6, arm 3-7.
///   E~8  path 0-...-7, arm 2-8.
struct TameSetting {
    TameFamily family;
    std::size_t m;
    UGraph graph;
    DimVector delta;

    std::size_t vertices() const { return graph.vertices(); }
    /// "A~3", "D~4", "E~6", ...
    std::string name() const;
    bool operator==(const TameSetting&) const = default;
};

TameSetting make_tame(TameFamily family, std::size_t m = 0);

/// Every tame setting with at most max_vertices vertices, ordered by vertex
/// count and then family.
std::vector<TameSetting> catalog(std::size_t max_vertices);

/// Injective map from a setting's vertices into a target graph's vertices.
struct Embedding {
    std::vector<std::size_t> map;
    bool operator==(const Embedding&) const = default;
};

struct Containment {
    TameSetting setting;
    Embedding embedding;
};

/// Both containment conditions: diagram edge multiplicities are dominated by
/// the target's, and delta_u <= a[map(u)]. Target loops are ignored.
bool valid_containment(const UGraph& g, const DimVector& a, const Containment& c);

/// Diagram vertices in breadth-first order from the highest-delta vertex
/// (smallest index on ties); every vertex after the first has an earlier
/// neighbour.
std::vector<std::size_t> search_order(const TameSetting& d);

/// Calls `visit` for each embedding of `setting` into (g, a) in search order
/// until it returns false. Returns the number of search nodes used.
std::uint64_t for_each_embedding(const UGraph& g, const DimVector& a, const TameSetting& setting,
                                 const std::function<bool(const Embedding&)>& visit);

/// First containment over the catalog (smallest settings first), or none.
/// "None" means no setting with at most |g| vertices embeds.
std::optional<Containment> contains_tame(const UGraph& g, const DimVector& a);

/// Every containment up to diagram automorphism: one representative per
/// (setting, image vertices with their delta labels).
std::vector<Containment> find_all_tame(const UGraph& g, const DimVector& a);

} // namespace sigma_roots
