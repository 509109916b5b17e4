#include "kinv/wirtinger.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "kinv/error.hpp"

namespace kinv {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

std::string gen(std::size_t arc) { return "x" + std::to_string(arc + 1); }

std::string power(std::size_t arc, int e) {
  return e == 1 ? gen(arc) : gen(arc) + "^" + std::to_string(e);
}

}  // namespace

WirtingerPresentation presentation(const Diagram& d) {
  WirtingerPresentation p;
  if (d.crossing_count() == 0) return p;

  const std::size_t edges = d.edge_count();
  UnionFind uf(edges + 1);
  for (const Crossing& x : d.crossings()) uf.unite(x.b, x.d);

  // Roots are the lowest label of each component, so scanning labels in
  // order numbers arcs by lowest edge.
  std::vector<std::size_t> arc_of(edges + 1);
  std::map<std::size_t, std::size_t> root_arc;
  for (std::size_t e = 1; e <= edges; ++e) {
    auto [it, fresh] = root_arc.emplace(uf.find(e), root_arc.size());
    arc_of[e] = it->second;
  }
  p.arc_count = root_arc.size();
  p.meridian = arc_of[1];

  std::vector<std::size_t> under_at(edges + 1, 0);
  int w = 0;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    p.relations.push_back({arc_of[x.b], arc_of[x.a], arc_of[x.c], d.sign(i)});
    under_at[x.a] = i;
    w += d.sign(i);
  }

  // Passing under crossing i conjugates the current meridian by
  // over_i^sign_i, so the product over the whole loop, later crossings on
  // the left, centralizes the meridian.
  for (std::size_t e = edges; e >= 1; --e) {
    std::size_t i = under_at[e];
    if (d.crossings()[i].a != static_cast<int>(e)) continue;
    p.longitude.push_back({p.relations[i].over, p.relations[i].sign});
  }
  if (w != 0) p.longitude.push_back({p.meridian, -w});
  return p;
}

std::vector<CheckResult> validate(const WirtingerPresentation& p) {
  std::vector<CheckResult> out;

  bool in_range = p.meridian < p.arc_count;
  for (const Relation& r : p.relations)
    in_range = in_range && r.over < p.arc_count && r.u_in < p.arc_count &&
               r.u_out < p.arc_count && (r.sign == 1 || r.sign == -1);
  for (const Letter& l : p.longitude) in_range = in_range && l.arc < p.arc_count;
  out.push_back({"indices", in_range, in_range ? "all arc indices valid" : "arc index out of range"});
  if (!in_range) return out;

  long sum = 0;
  for (const Letter& l : p.longitude) sum += l.exponent;
  out.push_back({"longitude-exponent-sum", sum == 0, "exponent sum " + std::to_string(sum)});

  if (!p.relations.empty()) {
    std::vector<int> ins(p.arc_count, 0), outs(p.arc_count, 0);
    for (const Relation& r : p.relations) {
      ++ins[r.u_in];
      ++outs[r.u_out];
    }
    bool ok = true;
    std::string detail = "each arc enters and leaves exactly one relation";
    for (std::size_t a = 0; a < p.arc_count && ok; ++a) {
      if (ins[a] != 1 || outs[a] != 1) {
        ok = false;
        detail = gen(a) + " is incoming in " + std::to_string(ins[a]) + " and outgoing in " +
                 std::to_string(outs[a]) + " relations";
      }
    }
    out.push_back({"arc-incidence", ok, detail});
  }

  UnionFind uf(p.arc_count);
  for (const Relation& r : p.relations) uf.unite(r.u_in, r.u_out);
  std::size_t rank = 0;
  for (std::size_t a = 0; a < p.arc_count; ++a) rank += uf.find(a) == a;
  out.push_back({"abelianization-rank", rank == 1, "rank " + std::to_string(rank)});
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += power(l.arc, l.exponent);
  }
  return s;
}

std::string to_string(const WirtingerPresentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (std::size_t a = 0; a < p.arc_count; ++a) out << ' ' << gen(a);
  out << '\n';
  out << "relations:\n";
  for (const Relation& r : p.relations)
    out << "  " << gen(r.u_out) << " = " << power(r.over, r.sign) << ' ' << gen(r.u_in) << ' '
        << power(r.over, -r.sign) << '\n';
  out << "meridian: " << gen(p.meridian) << '\n';
  out << "longitude: " << word_to_string(p.longitude) << '\n';
  return out.str();
}

}  // namespace kinv
