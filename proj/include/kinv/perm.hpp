#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kinv {

/// A point of a permutation domain. Degrees are bounded by 255.
using Point = std::uint8_t;

inline constexpr std::size_t kMaxDegree = 255;

/// Permutation of {0, ..., degree-1} stored as a flat image array.
///
/// Products compose as functions: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  static Permutation identity(std::size_t degree);

  /// Throws InvalidInput unless `images` is a bijection on 0..n-1.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// First point moved by this permutation, or degree() if none.
  std::size_t first_moved() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Disjoint cycle notation on 1-based points; identity prints as "()".
  std::string to_cycles() const;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// c * x * c^-1
Permutation conjugate(const Permutation& x, const Permutation& c);

/// Least common multiple of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

/// Parses disjoint cycle notation over 1-based points, e.g. "(1,2,3)(4,5)".
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace kinv
