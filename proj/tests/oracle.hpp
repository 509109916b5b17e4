// Brute-force reference implementations used to cross-check the library.
//
// Nothing here calls into the Wirtinger, group or search code: arcs, signs
// and the longitude are read off the raw PD integers, groups are closed by
// breadth-first multiplication, and homomorphisms are found by trying every
// class-valued assignment of the arcs.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "kinv/perm.hpp"

namespace oracle {

using kinv::Permutation;
using PD = std::vector<std::array<int, 4>>;

inline Permutation mul(const Permutation& p, const Permutation& q) {
  std::vector<kinv::Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = p[q[x]];
  return Permutation::from_images(out);
}

inline Permutation inv(const Permutation& p) {
  std::vector<kinv::Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[p[x]] = static_cast<kinv::Point>(x);
  return Permutation::from_images(out);
}

inline Permutation ident(std::size_t n) {
  std::vector<kinv::Point> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = static_cast<kinv::Point>(x);
  return Permutation::from_images(out);
}

/// All elements of <gens>, by closing under right multiplication.
inline std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{ident(n)};
  std::vector<Permutation> frontier{ident(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Permutation y = mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

inline std::vector<Permutation> conj_class(const std::set<Permutation>& group, const Permutation& g) {
  std::set<Permutation> out;
  for (const auto& c : group) out.insert(mul(mul(c, g), inv(c)));
  return {out.begin(), out.end()};
}

/// Arc, sign and longitude data read directly from a PD code.
struct Knot {
  int edges = 0;
  std::vector<int> arc_of_edge;  // indexed by edge label
  int arcs = 0;
  struct Cross {
    int over, in, out, sign;
  };
  std::vector<Cross> crossings;
  // (arc, exponent) for each under-pass, in traversal order from edge 1
  std::vector<std::pair<int, int>> under_passes;
  int writhe = 0;
};

inline Knot analyze(const PD& pd) {
  Knot k;
  k.edges = 2 * static_cast<int>(pd.size());
  int m = k.edges;
  auto next = [m](int e) { return e % m + 1; };
  std::vector<int> under_end(m + 1, -1);  // crossing where the edge ends under
  for (std::size_t i = 0; i < pd.size(); ++i) under_end[pd[i][0]] = static_cast<int>(i);

  // an arc starts right after an under-pass
  k.arc_of_edge.assign(m + 1, -1);
  int start = 1;
  for (int e = 1; e <= m; ++e)
    if (under_end[e] >= 0) {
      start = next(e);
      break;
    }
  std::map<int, int> first_label;  // arc start edge -> provisional id
  int e = start, cur = -1;
  for (int step = 0; step < m; ++step) {
    if (cur < 0) cur = static_cast<int>(first_label.size()), first_label[e] = cur;
    k.arc_of_edge[e] = cur;
    if (under_end[e] >= 0) cur = -1;
    e = next(e);
  }
  // renumber arcs by lowest edge label
  std::map<int, int> lowest;
  for (int x = 1; x <= m; ++x) {
    int a = k.arc_of_edge[x];
    if (!lowest.count(a)) lowest[a] = x;
  }
  std::map<int, int> by_label;
  for (auto [a, lbl] : lowest) by_label[lbl] = a;
  std::map<int, int> rename;
  for (auto [lbl, a] : by_label) rename[a] = static_cast<int>(rename.size());
  for (int x = 1; x <= m; ++x) k.arc_of_edge[x] = rename[k.arc_of_edge[x]];
  k.arcs = static_cast<int>(rename.size());

  for (const auto& x : pd) {
    int a = x[0], b = x[1], c = x[2], d = x[3];
    int sign = next(d) == b ? 1 : -1;
    k.crossings.push_back({k.arc_of_edge[b], k.arc_of_edge[a], k.arc_of_edge[c], sign});
    k.writhe += sign;
  }
  for (int x = 1; x <= m; ++x)
    if (under_end[x] >= 0) {
      const Knot::Cross& c = k.crossings[under_end[x]];
      k.under_passes.push_back({c.over, c.sign});
    }
  return k;
}

struct Counts {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;
  std::map<Permutation, std::uint64_t> longitudes;
};

/// Every assignment of arcs 1.. into class(g), arc 0 fixed to g.
inline Counts count(const PD& pd, const std::vector<Permutation>& group_gens, const Permutation& g) {
  std::size_t n = g.degree();
  std::set<Permutation> group = closure(n, group_gens);
  std::vector<Permutation> cls = conj_class(group, g);
  Knot k = analyze(pd);
  Counts out;
  std::vector<Permutation> img(k.arcs, g);
  std::vector<std::size_t> idx(k.arcs, 0);
  for (;;) {
    for (int a = 1; a < k.arcs; ++a) img[a] = cls[idx[a]];
    bool ok = true;
    for (const auto& c : k.crossings) {
      Permutation o = c.sign > 0 ? img[c.over] : inv(img[c.over]);
      if (mul(mul(o, img[c.in]), inv(o)) != img[c.out]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++out.homs;
      if (closure(n, img).size() == group.size()) ++out.epis;
      Permutation l = ident(n);
      for (auto it = k.under_passes.rbegin(); it != k.under_passes.rend(); ++it)
        l = mul(l, it->second > 0 ? img[it->first] : inv(img[it->first]));
      for (int w = 0; w < std::abs(k.writhe); ++w) l = mul(l, k.writhe > 0 ? inv(g) : g);
      ++out.longitudes[l];
    }
    int a = 1;
    while (a < k.arcs && ++idx[a] == cls.size()) idx[a++] = 0;
    if (a >= k.arcs) break;
  }
  return out;
}

}  // namespace oracle
