#pragma once

#include "sigma_roots/genetic.hpp"
#include "sigma_roots/local.hpp"
#include "sigma_roots/quiver.hpp"
#include "sigma_roots/sigma.hpp"
#include "sigma_roots/tame.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

// Text and JSON formats. Vertices are 1-based everywhere in this file's
// formats and 0-based in memory.
namespace sigma_roots::io {

using nlohmann::json;

/// Line format: "vertices K", then "arrow I J [M]" lines (M defaults to 1,
/// repeats accumulate); '#' starts a comment.
Quiver parse_quiver_text(std::string_view text);
/// {"vertices": K, "arrows": [[i, j, m], ...]}
Quiver parse_quiver_json(const json& j);
/// Dispatches on the first non-blank character ('{' means JSON).
Quiver parse_quiver(std::string_view text);
/// The inline form uses ';' as line separator.
Quiver parse_quiver_inline(std::string_view text);
std::string quiver_to_text(const Quiver& q);
json to_json(const Quiver& q);

/// "1,0,2" or "(1,0,2)"; length must be k.
DimVector parse_dim_vector(std::string_view text, std::size_t k);
/// As parse_dim_vector, but a single value is repeated k times.
DimVector parse_bound(std::string_view text, std::size_t k);
/// Comma-separated rationals, or a lone "0" for the zero weight.
Weight parse_weight(std::string_view text, std::size_t k);
/// "(d1,b1,...,bk);(d2,...)"
RepType parse_rep_type(std::string_view text, std::size_t k);

/// {"vertices": l, "edges": [[i, j, m], ...], "loops": [l_1, ...]}
UGraph parse_ugraph_json(const json& j);
UGraph parse_ugraph(std::string_view text);
json to_json(const UGraph& g);

json to_json(const DimVector& v);
json to_json(const Weight& w);
json to_json(const RepType& t);
json to_json(const TameSetting& s);
json to_json(const Containment& c);
json to_json(const SigmaVerdict& v);
json to_json(const GeneticCert& c);
json to_json(const ClosureMember& m);
json to_json(const IrreducibleResult& r);

} // namespace sigma_roots::io
