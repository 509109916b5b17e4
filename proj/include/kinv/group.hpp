#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kinv/perm.hpp"

namespace kinv {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Base points are the smallest points moved by the generator that opens a
/// new level. Each level keeps an explicit transversal, which is fine for the
/// small degrees this library targets.
class StabilizerChain {
 public:
  /// Builds the chain for <gens>. If `order_limit` is nonzero the build stops
  /// as soon as the running lower bound on the order reaches it; the chain is
  /// then incomplete and only `order_at_least()` is meaningful.
  StabilizerChain(std::size_t degree, std::span<const Permutation> gens,
                  std::uint64_t order_limit = 0);

  std::size_t degree() const { return degree_; }
  bool complete() const { return complete_; }

  /// Group order (product of basic orbit lengths). Requires complete().
  std::uint64_t order() const;

  /// Lower bound on the order; exact when complete().
  std::uint64_t order_at_least() const;

  std::vector<Point> base() const;

  /// Residue of `g` after sifting; the identity iff g is in the group.
  Permutation sift(Permutation g) const;
  bool contains(const Permutation& g) const;

  /// Calls `f` on every group element. Requires complete().
  template <typename F>
  void for_each_element(F&& f) const {
    Permutation acc = Permutation::identity(degree_);
    walk(0, acc, f);
  }

 private:
  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<Permutation> reps;      // reps[k](base) == orbit[k]
    std::vector<Permutation> reps_inv;
    std::vector<int> rep_index;         // point -> index into reps, or -1
  };

  void add_generator(std::size_t level, const Permutation& g);
  std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t start) const;
  bool limit_reached() const;

  template <typename F>
  void walk(std::size_t level, const Permutation& acc, F& f) const {
    if (level == levels_.size()) {
      f(acc);
      return;
    }
    for (const Permutation& u : levels_[level].reps) walk(level + 1, acc * u, f);
  }

  std::size_t degree_;
  std::vector<Level> levels_;
  std::uint64_t order_limit_;
  bool complete_ = true;
};

/// A finite permutation group with its stabilizer chain built on construction.
/// Immutable afterwards and safe to share between threads.
class PermGroup {
 public:
  /// Throws InvalidInput on an empty generator list or mismatched degrees.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  const StabilizerChain& chain() const { return chain_; }

  std::uint64_t order() const { return chain_.order(); }
  bool contains(const Permutation& g) const { return chain_.contains(g); }

  /// True when no non-identity element commutes with every generator.
  bool has_trivial_center() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  StabilizerChain chain_;
};

/// Conjugacy class of an element, fully materialized.
///
/// Members are sorted by image array; `index_of` is a hash lookup.
class ConjClass {
 public:
  ConjClass(Permutation representative, std::vector<Permutation> sorted_members);

  const Permutation& representative() const { return representative_; }
  const std::vector<Permutation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// Position of `p` in members(), or -1.
  std::int64_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

 private:
  Permutation representative_;
  std::vector<Permutation> members_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

std::uint64_t group_order(const PermGroup& group);

/// Orbit of `x` under conjugation by the group.
ConjClass conjugacy_class(const PermGroup& group, const Permutation& x);

/// |G| / |class(x)|
std::uint64_t centralizer_order(const PermGroup& group, const Permutation& x);

/// Order of the subgroup generated by `gens`.
std::uint64_t subgroup_order(std::size_t degree, std::span<const Permutation> gens);

/// True if `gens` generate a subgroup of order >= `target` (stops early).
bool generates_order_at_least(std::size_t degree, std::span<const Permutation> gens,
                              std::uint64_t target);

/// First element of order exactly `n` met in a breadth-first walk over
/// words in the generators (generator-list order).
std::optional<Permutation> find_class_rep(const PermGroup& group, std::uint64_t n);

/// Reads a group file: `degree N` followed by one generator per line in cycle
/// notation; `#` starts a comment.
PermGroup parse_group_file(std::string_view text, std::string name = {});
PermGroup load_group_file(const std::filesystem::path& path);

/// Directory holding `knots.txt` and `groups/`. Honors KINV_DATA_DIR.
std::filesystem::path default_data_dir();

/// Resolves `name` as `<data>/groups/<name>.grp`, falling back to a file path.
PermGroup builtin_group(std::string_view name,
                        const std::filesystem::path& data_dir = default_data_dir());

}  // namespace kinv
