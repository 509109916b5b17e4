#include "kinv/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "kinv/error.hpp"

namespace kinv {

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree)
    throw InvalidInput("degree " + std::to_string(degree) + " exceeds the supported maximum of " +
                       std::to_string(kMaxDegree));
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.size() > kMaxDegree)
    throw InvalidInput("degree " + std::to_string(images.size()) + " exceeds the supported maximum");
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y])
      throw InvalidInput("image array is not a bijection");
    seen[y] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(inv));
}

std::size_t Permutation::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return x;
  return images_.size();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::vector<Point> r(q.images_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = p.images_[q.images_[x]];
  return Permutation(std::move(r));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ',';
      out << x + 1;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation conjugate(const Permutation& x, const Permutation& c) {
  // c x c^-1 maps c(i) -> c(x(i))
  std::vector<Point> r(x.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[c[i]] = c[x[i]];
  return Permutation::from_images(std::move(r));
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree > kMaxDegree) throw ParseError("degree exceeds the supported maximum");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("cycle notation '" + std::string(text) + "': " + what);
  };

  skip_ws();
  if (i == text.size()) fail("empty input");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a point number");
      std::size_t point = std::stoul(std::string(text.substr(start, i - start)));
      if (point < 1 || point > degree)
        fail("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (used[point - 1]) fail("point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(point - 1);
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail(std::string("unexpected character '") + text[i] + "'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace kinv
