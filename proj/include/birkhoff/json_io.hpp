#pragma once

#include "birkhoff/array.hpp"

#include <json.hpp>

#include <string>

namespace birkhoff {

using Json = nlohmann::ordered_json;

/// An array together with the polytope it is claimed to belong to.
struct ArrayDocument {
    PolytopeSpec spec;
    Array3 array;
};

/// Entry encoding: an integer when the denominator is 1, else the string "p/q".
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& value);

/**
 * {"kind": "omega"|"sigma", "n": n, "d": d, "entries": [...]} with entries
 * nested d+1 deep in cell order, entries[i][j][k] = A(i, j, k).
 */
Json array_to_json(const Array3& a, PolytopeKind kind);
ArrayDocument array_from_json(const Json& doc);

std::string serialize(const Array3& a, PolytopeKind kind);
ArrayDocument deserialize(const std::string& text);

ArrayDocument read_array_file(const std::string& path);

}  // namespace birkhoff
