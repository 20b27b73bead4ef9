#ifndef SQG_DOCUMENT_HPP
#define SQG_DOCUMENT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "sqg/complex.hpp"
#include "sqg/graphs.hpp"

namespace sqg {

/// Canonical on-disk form of a complex: vertices sorted by (colour, label)
/// with ids dense from 1, facets in those ids each ascending and listed in
/// lexicographic order, antipode as sorted pairs. Field order is fixed, so
/// the same complex always serialises to the same bytes.
nlohmann::ordered_json to_document(const Complex& c, int n, int k);

std::string document_to_string(const nlohmann::ordered_json& doc);

struct ParsedDocument {
    Complex complex;  // vertex id i corresponds to document id i+1
    int n = 0;
    int k = 0;
};

/// Parse and validate a document. Throws parameter_error on anything
/// malformed: missing fields, loose ids, unsorted canonical order, facet or
/// antipode references out of range.
ParsedDocument from_document(const nlohmann::ordered_json& doc);
ParsedDocument parse_document_string(const std::string& text);

/// DIMACS colouring format: `p edge V E` header, then sorted 1-indexed
/// `e u v` lines.
std::string to_dimacs(const SimpleGraph& g);

/// Companion map for a DIMACS file: one `<id> <label>` line per vertex,
/// colour-tagged when the graph carries colours.
std::string dimacs_label_map(const SimpleGraph& g);

/// One facet per line, vertices as colour-tagged label tuples.
std::string facets_text(const Complex& c);

}  // namespace sqg

#endif
