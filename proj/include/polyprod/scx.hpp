// File formats for simplicial complexes.
//
// Text format ".scx":
//     # comment
//     vertices <m>
//     facet <i1> <i2> ... <ik>     (1-based, whitespace separated)
//
// Structured format (JSON): {"vertices": m, "facets": [[1,2],[2,3]]}.
// Both round-trip losslessly, ghost vertices included (they are the
// ground-set elements missing from every facet).

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "polyprod/complex.hpp"
#include "polyprod/errors.hpp"

namespace polyprod {

SimplicialComplex read_scx(std::istream& in, int max_vertices = kDefaultMaxVertices);
SimplicialComplex read_scx_file(const std::string& path, int max_vertices = kDefaultMaxVertices);

void write_scx(std::ostream& out, const SimplicialComplex& K);
std::string to_scx_string(const SimplicialComplex& K);

nlohmann::json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const nlohmann::json& doc, int max_vertices = kDefaultMaxVertices);

// Dispatches on extension: ".json" is the structured format, anything else
// is the text format.
SimplicialComplex read_complex_file(const std::string& path, int max_vertices = kDefaultMaxVertices);
void write_complex_file(const std::string& path, const SimplicialComplex& K);

}  // namespace polyprod
