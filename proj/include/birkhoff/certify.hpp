#pragma once

#include "birkhoff/array.hpp"
#include "birkhoff/json_io.hpp"
#include "birkhoff/linalg.hpp"
#include "birkhoff/support_graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace birkhoff::certify {

enum class Method { GraphCriterion, RankTest, Enumeration };

std::string to_string(Method method);

/// Two distinct members of the polytope whose midpoint is the certified array.
struct Witness {
    Array3 plus;
    Array3 minus;
};

struct VertexCertificate {
    bool is_vertex = false;
    Method method = Method::RankTest;
    std::optional<Witness> witness;
};

/// Checks that a non-vertex witness has plus != minus, both in the polytope,
/// and (plus + minus) / 2 == a exactly. Vacuously true for vertices.
bool witness_is_valid(const VertexCertificate& cert, const Array3& a, const PolytopeSpec& spec);

/**
 * Graph criterion for arrays whose constraint sets each hold either a single
 * 1 or exactly two ½ entries (lines for Omega, hyperplanes for Sigma).
 *
 * A is a vertex iff no component of its support graph is bipartite. For a
 * bipartite component with colour classes P and Q the witness is A ± ½Δ where
 * Δ is +1 on P and -1 on Q.
 *
 * Throws PreconditionError if the support is not of that form.
 */
VertexCertificate is_vertex_half_integral(const Array3& a, PolytopeKind kind = PolytopeKind::Omega);

/// True iff every constraint set of the polytope holds one 1 or two ½ entries.
bool has_half_integral_support(const Array3& a, PolytopeKind kind);

/// 0/1 matrix with one row per constraint set and one column per cell.
linalg::IntMatrix constraint_matrix(const PolytopeSpec& spec);

/// Exact rank of the equality constraints (the affine hull has dimension
/// n^(d+1) - rank).
std::size_t constraint_rank(const PolytopeSpec& spec);

/**
 * Authoritative vertex test: A is a vertex iff the constraint columns of its
 * support are linearly independent. Otherwise a kernel vector v gives the
 * witness A ± t v with t half the largest step keeping A - t|v| >= 0.
 *
 * Throws PreconditionError if A is not in the polytope.
 */
VertexCertificate is_vertex_rank(const Array3& a, const PolytopeSpec& spec);

/// Largest number of cells accepted by enumerate_vertices.
inline constexpr std::size_t kMaxEnumerationCells = 32;

/**
 * Every vertex of a tiny polytope, by exact double description over the
 * affine hull. Sorted by entries, each one re-checked by the rank test.
 * Throws PreconditionError when n^(d+1) exceeds kMaxEnumerationCells.
 */
std::vector<Array3> enumerate_vertices(const PolytopeSpec& spec);

/// Membership in enumerate_vertices(spec); tiny instances only.
VertexCertificate is_vertex_enumeration(const Array3& a, const PolytopeSpec& spec);

/// Lexicographic order on entries, used to sort vertex lists.
bool entries_less(const Array3& lhs, const Array3& rhs);

Json certificate_to_json(const VertexCertificate& cert, PolytopeKind kind);

}  // namespace birkhoff::certify
