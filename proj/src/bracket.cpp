#include "kinv/bracket.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "kinv/error.hpp"

namespace kinv {

namespace {

// Small union-find over edge labels, reset per state.
class EdgeLoops {
 public:
  explicit EdgeLoops(std::size_t edges) : parent_(edges + 1) {}

  std::size_t count_after(const std::vector<Crossing>& xs, std::uint32_t state) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::size_t components = parent_.size() - 1;
    auto join = [&](int x, int y) {
      std::size_t rx = find(x), ry = find(y);
      if (rx != ry) {
        parent_[rx] = ry;
        --components;
      }
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Crossing& x = xs[i];
      if (state >> i & 1u) {
        join(x.a, x.d);
        join(x.b, x.c);
      } else {
        join(x.a, x.b);
        join(x.c, x.d);
      }
    }
    return components;
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::vector<std::size_t> parent_;
};

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  if (n == 0) return LaurentPoly(1);
  if (n > kMaxBracketCrossings)
    throw ComputeError("Kauffman bracket limited to " + std::to_string(kMaxBracketCrossings) +
                       " crossings, diagram has " + std::to_string(n));

  // (number of B-smoothings, loops) -> number of states
  std::map<std::pair<int, std::size_t>, std::uint64_t> histogram;
  EdgeLoops loops(d.edge_count());
  const std::uint32_t states = 1u << n;
  for (std::uint32_t s = 0; s < states; ++s) {
    int b = std::popcount(s);
    ++histogram[{b, loops.count_after(d.crossings(), s)}];
  }

  const LaurentPoly delta = LaurentPoly({-1, 0, 0, 0, -1}, -2);  // -A^2 - A^-2
  LaurentPoly total;
  for (const auto& [key, count] : histogram) {
    auto [b, l] = key;
    int a_exp = static_cast<int>(n) - 2 * b;
    LaurentPoly term = LaurentPoly::monomial(BigInt(count), a_exp);
    for (std::size_t k = 1; k < l; ++k) term = term * delta;
    total += term;
  }
  return total;
}

LaurentPoly jones(const Diagram& d) {
  const int w = writhe(d);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  LaurentPoly f = kauffman_bracket(d) * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  LaurentPoly in_a4;
  try {
    in_a4 = f.compress_exponents(4);
  } catch (const ComputeError& e) {
    throw ComputeError(std::string("normalized bracket is not a polynomial in A^4: ") + e.what());
  }
  return in_a4.inverted();  // t = A^-4
}

}  // namespace kinv
