#ifndef NCALG_IO_HPP
#define NCALG_IO_HPP

#include "ncalg/algebra.hpp"
#include "ncalg/division.hpp"
#include "ncalg/ncpoly.hpp"
#include "ncalg/solvers.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace ncalg {

using json = nlohmann::ordered_json;

/*
 * Algebra spec document:
 *   {"name": str, "dim": int, "basis_labels": [str], "unit_index": int|null,
 *    "associative": bool, "constants": [[[scalar]]]}   constants[k][l][p]
 * Scalars are integers, "p/q" strings or floats. Malformed JSON raises
 * ParseError with line/column; schema and axiom failures raise the
 * algebra-core errors (ShapeError, UnitAxiomError, AssociativityError).
 */
Algebra load_algebra(std::string_view document);
Algebra load_algebra_file(const std::string& path);
json algebra_to_json(const AlgebraSpec& spec);

/// Builtin name ("quaternion", "complex") or a spec file path.
Algebra resolve_algebra(const std::string& source);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json element_to_json(const Element& x);
/// Canonical form: one monomial per nonzero tensor entry, each a list of coordinate tuples.
json polynomial_to_json(const NcPolynomial& p);
NcPolynomial polynomial_from_json(const Algebra& algebra, const json& j);
json rootset_to_json(const RootSet& roots, std::size_t samples = 0, std::uint64_t seed = 0);
json division_to_json(const DivisionResult& result);

} // namespace ncalg

#endif
