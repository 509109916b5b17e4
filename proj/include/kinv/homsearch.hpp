#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kinv/group.hpp"
#include "kinv/perm.hpp"
#include "kinv/wirtinger.hpp"

namespace kinv {

/// One step of a search schedule.
///
/// Assign branches over the meridian's conjugacy class (or fixes the
/// meridian itself), Propagate solves a relation for one under-arc, and
/// Check filters on a relation whose arcs are all known.
struct Step {
  enum class Kind { Assign, Propagate, Check };
  Kind kind;
  std::size_t arc = 0;       // Assign / Propagate target
  std::size_t relation = 0;  // Propagate / Check

  friend bool operator==(const Step&, const Step&) = default;
};

struct Schedule {
  std::vector<Step> steps;

  /// Assign steps other than the first (the meridian).
  std::size_t branching_depth() const;
};

/// Greedy unit-propagation order starting from the meridian arc.
Schedule plan_order(const WirtingerPresentation& p, std::size_t meridian);

struct SearchSpec {
  WirtingerPresentation presentation;
  PermGroup group;
  Permutation meridian_image;
  /// Restrict the longitude breakdown to epimorphisms.
  bool epi_only = false;
  bool collect_longitudes = false;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct HomCountReport {
  std::uint64_t hom_count = 0;
  std::uint64_t epi_count = 0;
  /// Longitude image h -> number of homomorphisms with (m, l) -> (g, h).
  /// Counts epimorphisms only when the search ran with epi_only.
  std::map<Permutation, std::uint64_t> longitude_breakdown;
  bool breakdown_is_epi_only = false;
  /// epi_count / |C_G(g)| when G has trivial center.
  std::optional<std::uint64_t> orbit_count;
  std::uint64_t nodes_visited = 0;
  std::size_t class_size = 0;
  std::size_t branching_depth = 0;
  double elapsed_ms = 0.0;
};

/// Counts homomorphisms from the knot group to G with the meridian sent to
/// `spec.meridian_image`, by depth-first search over class-valued arc
/// assignments. Throws InvalidInput if the meridian image is not in G.
HomCountReport count_homs(const SearchSpec& spec);

/// epi_count / |C_G(x)|. Throws ComputeError if G has nontrivial center or
/// the division is not exact.
std::uint64_t orbit_reduce(const HomCountReport& report, const PermGroup& group,
                           const Permutation& x);

enum class Verdict { NonInvertible, Inconclusive };

std::string to_string(Verdict v);

struct InvertibilityResult {
  Verdict verdict = Verdict::Inconclusive;
  HomCountReport forward;  // meridian -> x
  HomCountReport inverse;  // meridian -> x^-1
  /// Human-readable description of the first mismatch, empty if none.
  std::string reason;
};

/// Compares counts for (x, h) against (x^-1, h^-1). A mismatch proves the
/// knot is not invertible; agreement proves nothing.
InvertibilityResult invertibility_test(const WirtingerPresentation& p, const PermGroup& group,
                                       const Permutation& x, unsigned threads = 1);

/// Left-to-right product of a word under an arc assignment.
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images);

}  // namespace kinv
