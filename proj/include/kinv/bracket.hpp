#pragma once

#include <cstddef>

#include "kinv/diagram.hpp"
#include "kinv/laurent.hpp"

namespace kinv {

/// State sums are 2^crossings; larger diagrams are refused.
inline constexpr std::size_t kMaxBracketCrossings = 24;

/// Kauffman bracket <D> as a Laurent polynomial in A, normalized so that the
/// crossingless diagram has bracket 1.
///
/// At X[a,b,c,d] the A-smoothing joins a-b and c-d; the B-smoothing joins
/// a-d and b-c.
LaurentPoly kauffman_bracket(const Diagram& d);

/// Jones polynomial in t = A^-4 from (-A^3)^(-writhe) <D>.
LaurentPoly jones(const Diagram& d);

}  // namespace kinv
