#include "kinv/alexander.hpp"

#include "kinv/error.hpp"

namespace kinv {

LaurentPoly fox_derivative(const Word& word, std::size_t arc) {
  LaurentPoly d;
  int prefix = 0;  // abelianized exponent of the letters read so far
  for (const Letter& l : word) {
    if (l.arc == arc && l.exponent != 0) {
      // d(x^k)/dx = 1 + x + ... + x^(k-1) for k > 0,
      //           = -(x^-1 + ... + x^k)   for k < 0.
      if (l.exponent > 0)
        for (int k = 0; k < l.exponent; ++k) d += LaurentPoly::monomial(1, prefix + k);
      else
        for (int k = -1; k >= l.exponent; --k) d -= LaurentPoly::monomial(1, prefix + k);
    }
    prefix += l.exponent;
  }
  return d;
}

Word relator(const Relation& r) {
  return {{r.over, r.sign}, {r.u_in, 1}, {r.over, -r.sign}, {r.u_out, -1}};
}

PolyMatrix fox_matrix(const WirtingerPresentation& p) {
  if (p.relations.empty())
    throw InvalidInput("presentation has no relations; the Alexander polynomial is 1");
  PolyMatrix m(p.relations.size(), std::vector<LaurentPoly>(p.arc_count));
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    Word r = relator(p.relations[i]);
    for (std::size_t j = 0; j < p.arc_count; ++j) m[i][j] = fox_derivative(r, j);
  }
  return m;
}

LaurentPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly alexander_poly(const WirtingerPresentation& p, std::optional<std::size_t> deleted_row) {
  if (p.relations.empty()) return LaurentPoly(1);
  PolyMatrix full = fox_matrix(p);
  const std::size_t drop_row = deleted_row.value_or(full.size() - 1);
  if (drop_row >= full.size()) throw InvalidInput("deleted row out of range");

  PolyMatrix minor;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (i == drop_row) continue;
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < p.arc_count; ++j)
      if (j != p.meridian) row.push_back(std::move(full[i][j]));
    minor.push_back(std::move(row));
  }
  LaurentPoly det = determinant(std::move(minor));
  if (det.is_zero())
    throw ComputeError("Alexander minor vanishes; the diagram is probably not realizable");
  return det.normalized();
}

}  // namespace kinv
