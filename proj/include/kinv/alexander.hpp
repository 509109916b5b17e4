#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kinv/laurent.hpp"
#include "kinv/wirtinger.hpp"

namespace kinv {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Fox derivative of `word` with respect to generator `arc`, abelianized by
/// sending every generator to t.
LaurentPoly fox_derivative(const Word& word, std::size_t arc);

/// Relator of a Wirtinger relation: over^s u_in over^-s u_out^-1.
Word relator(const Relation& r);

/// Alexander matrix: entry (i, j) is d(r_i)/d(x_j) at x_j -> t.
/// Throws InvalidInput for the unknot presentation (no relations).
PolyMatrix fox_matrix(const WirtingerPresentation& p);

/// Determinant by fraction-free (Bareiss) elimination.
LaurentPoly determinant(PolyMatrix m);

/// Normalized Alexander polynomial, using the minor that drops
/// `deleted_row` (default: the last) and the meridian's column.
/// Throws ComputeError on a zero minor.
LaurentPoly alexander_poly(const WirtingerPresentation& p,
                           std::optional<std::size_t> deleted_row = std::nullopt);

}  // namespace kinv
