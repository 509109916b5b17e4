#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kinv {

/// One crossing of a planar diagram code, X[a,b,c,d].
///
/// Labels are listed counterclockwise starting from the incoming under-edge
/// `a`; the under strand runs a -> c and the over strand joins b and d.
struct Crossing {
  int a, b, c, d;

  std::array<int, 4> labels() const { return {a, b, c, d}; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// An oriented knot diagram. Edges 1..2n are numbered along the knot.
///
/// Immutable once built; every constructor path validates the invariants.
class Diagram {
 public:
  /// The 0-crossing unknot.
  Diagram() = default;

  /// Validates the crossings; throws InvalidInput naming the offending term.
  explicit Diagram(std::vector<Crossing> crossings, std::string name = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t edge_count() const { return 2 * crossings_.size(); }
  const std::string& name() const { return name_; }

  /// +1 if the over strand runs d -> b, -1 if it runs b -> d.
  int sign(std::size_t crossing) const { return signs_[crossing]; }

  /// Over-strand edge entering / leaving the crossing.
  int over_in(std::size_t crossing) const;
  int over_out(std::size_t crossing) const;

  /// Cyclic successor of an edge label along the orientation.
  int next_edge(int edge) const { return edge == static_cast<int>(edge_count()) ? 1 : edge + 1; }

  /// Space-separated `X[a,b,c,d]` terms, parseable by parse_pd.
  std::string to_pd() const;

  /// Lexicographically least crossing list over all cyclic relabelings.
  std::vector<Crossing> canonical() const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.crossings_ == y.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> signs_;
  std::string name_;
};

Diagram parse_pd(std::string_view text, std::string name = {});

int writhe(const Diagram& d);

/// Same curve with the orientation reversed; edge 1 keeps its label.
Diagram reverse(const Diagram& d);

/// Every crossing switched.
Diagram mirror(const Diagram& d);

/// True if the diagrams agree after cyclic relabeling of edges and reordering
/// of crossings.
bool same_up_to_relabeling(const Diagram& x, const Diagram& y);

/// Named diagrams read from a table file (`name PD-code` per line).
class KnotTable {
 public:
  static KnotTable parse(std::string_view text);
  static KnotTable load(const std::filesystem::path& path);

  /// Throws InvalidInput listing the available names when `name` is unknown.
  const Diagram& lookup(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, Diagram, std::less<>> knots_;
};

/// The bundled table at `<data_dir>/knots.txt`.
const KnotTable& default_knot_table();

/// Shorthand for default_knot_table().lookup(name).
Diagram table_lookup(std::string_view name);

}  // namespace kinv
