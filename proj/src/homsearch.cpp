#include "kinv/homsearch.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "kinv/error.hpp"

namespace kinv {

std::size_t Schedule::branching_depth() const {
  std::size_t assigns = 0;
  for (const Step& s : steps) assigns += s.kind == Step::Kind::Assign;
  return assigns == 0 ? 0 : assigns - 1;
}

Schedule plan_order(const WirtingerPresentation& p, std::size_t meridian) {
  if (meridian >= p.arc_count) throw InvalidInput("meridian arc out of range");
  Schedule plan;
  std::vector<bool> known(p.arc_count, false);
  std::vector<bool> used(p.relations.size(), false);
  std::size_t known_count = 0;

  auto assign = [&](std::size_t arc) {
    plan.steps.push_back({Step::Kind::Assign, arc, 0});
    known[arc] = true;
    ++known_count;
  };
  auto known_arcs = [&](const Relation& r) {
    std::size_t arcs[3] = {r.over, r.u_in, r.u_out};
    std::sort(arcs, arcs + 3);
    std::size_t distinct = 0, k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i > 0 && arcs[i] == arcs[i - 1]) continue;
      ++distinct;
      k += known[arcs[i]];
    }
    return std::pair{k, distinct};
  };

  assign(meridian);
  while (true) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < p.relations.size(); ++i) {
        if (used[i]) continue;
        const Relation& r = p.relations[i];
        if (known[r.over] && known[r.u_in] && known[r.u_out]) {
          plan.steps.push_back({Step::Kind::Check, 0, i});
          used[i] = true;
          progress = true;
        } else if (known[r.over] && known[r.u_in] && !known[r.u_out]) {
          plan.steps.push_back({Step::Kind::Propagate, r.u_out, i});
          known[r.u_out] = true;
          ++known_count;
          used[i] = true;
          progress = true;
        } else if (known[r.over] && known[r.u_out] && !known[r.u_in]) {
          plan.steps.push_back({Step::Kind::Propagate, r.u_in, i});
          known[r.u_in] = true;
          ++known_count;
          used[i] = true;
          progress = true;
        }
      }
    }
    if (known_count == p.arc_count) break;

    // Stuck: every pending relation with two known arcs lacks its over-arc.
    // Pick the unknown arc that closes the most of them.
    std::vector<std::size_t> score(p.arc_count, 0);
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      if (used[i]) continue;
      const Relation& r = p.relations[i];
      auto [k, distinct] = known_arcs(r);
      if (k < 2 || k == distinct) continue;
      for (std::size_t a : {r.over, r.u_in, r.u_out})
        if (!known[a]) {
          ++score[a];
          break;
        }
    }
    std::size_t best = p.arc_count;
    for (std::size_t a = 0; a < p.arc_count; ++a) {
      if (known[a]) continue;
      if (best == p.arc_count || score[a] > score[best]) best = a;
    }
    assign(best);
  }
  // Relations never touched (only possible for malformed input) still get checked.
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    if (!used[i]) plan.steps.push_back({Step::Kind::Check, 0, i});
  return plan;
}

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images) {
  std::size_t degree = images.empty() ? 0 : images.front().degree();
  Permutation acc = Permutation::identity(degree);
  for (const Letter& l : w) {
    const Permutation& x = images.at(l.arc);
    Permutation step = l.exponent >= 0 ? x : x.inverse();
    for (int k = 0; k < std::abs(l.exponent); ++k) acc = acc * step;
  }
  return acc;
}

namespace {

// Conjugation within a class, addressed by member index. Small classes use
// precomputed tables; large ones fall back to a hash lookup.
class ClassAlgebra {
 public:
  // Two n x n tables of 16-bit indices: 256 MiB at the limit.
  static constexpr std::size_t kTableLimit = 8192;

  explicit ClassAlgebra(const ConjClass& cls) : cls_(cls), n_(cls.size()) {
    if (n_ > kTableLimit) return;
    fwd_.resize(n_ * n_);
    bwd_.resize(n_ * n_);
    const auto& m = cls.members();
    for (std::size_t o = 0; o < n_; ++o)
      for (std::size_t u = 0; u < n_; ++u) {
        std::uint32_t v = lookup(conjugate(m[u], m[o]));
        fwd_[o * n_ + u] = static_cast<std::uint16_t>(v);
        bwd_[o * n_ + v] = static_cast<std::uint16_t>(u);
      }
  }

  /// o u o^-1
  std::uint32_t fwd(std::uint32_t o, std::uint32_t u) const {
    if (!fwd_.empty()) return fwd_[o * n_ + u];
    return lookup(conjugate(cls_.members()[u], cls_.members()[o]));
  }

  /// o^-1 u o
  std::uint32_t bwd(std::uint32_t o, std::uint32_t u) const {
    if (!bwd_.empty()) return bwd_[o * n_ + u];
    return lookup(conjugate(cls_.members()[u], cls_.members()[o].inverse()));
  }

  /// o^s u o^-s
  std::uint32_t conj(std::uint32_t o, int s, std::uint32_t u) const {
    return s > 0 ? fwd(o, u) : bwd(o, u);
  }

 private:
  std::uint32_t lookup(const Permutation& p) const {
    std::int64_t k = cls_.index_of(p);
    if (k < 0) throw ComputeError("conjugacy class is not closed under conjugation");
    return static_cast<std::uint32_t>(k);
  }

  const ConjClass& cls_;
  std::size_t n_;
  std::vector<std::uint16_t> fwd_, bwd_;
};

struct Accumulator {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;
  std::uint64_t nodes = 0;
  std::map<Permutation, std::uint64_t> longitudes;

  void merge(const Accumulator& o) {
    homs += o.homs;
    epis += o.epis;
    nodes += o.nodes;
    for (const auto& [h, c] : o.longitudes) longitudes[h] += c;
  }
};

class Searcher {
 public:
  Searcher(const SearchSpec& spec, const Schedule& plan, const ConjClass& cls,
           const ClassAlgebra& alg, std::uint32_t meridian_index)
      : spec_(spec),
        plan_(plan),
        cls_(cls),
        alg_(alg),
        meridian_index_(meridian_index),
        values_(spec.presentation.arc_count, 0),
        group_order_(spec.group.order()) {
    first_branch_ = plan.steps.size();
    for (std::size_t k = 1; k < plan.steps.size(); ++k)
      if (plan.steps[k].kind == Step::Kind::Assign) {
        first_branch_ = k;
        break;
      }
  }

  /// Explores the subtrees whose first branching value v has v % stride == offset.
  Accumulator run(std::uint32_t offset, std::uint32_t stride) {
    offset_ = offset;
    stride_ = stride;
    acc_ = {};
    descend(0);
    return std::move(acc_);
  }

 private:
  void descend(std::size_t k) {
    if (k == plan_.steps.size()) {
      leaf();
      return;
    }
    const Step& s = plan_.steps[k];
    const auto& rels = spec_.presentation.relations;
    switch (s.kind) {
      case Step::Kind::Assign: {
        if (k == 0) {
          values_[s.arc] = meridian_index_;
          descend(k + 1);
          return;
        }
        const std::uint32_t n = static_cast<std::uint32_t>(cls_.size());
        const bool split = k == first_branch_;
        for (std::uint32_t v = split ? offset_ : 0; v < n; v += split ? stride_ : 1) {
          ++acc_.nodes;
          values_[s.arc] = v;
          descend(k + 1);
        }
        return;
      }
      case Step::Kind::Propagate: {
        const Relation& r = rels[s.relation];
        if (s.arc == r.u_out)
          values_[s.arc] = alg_.conj(values_[r.over], r.sign, values_[r.u_in]);
        else
          values_[s.arc] = alg_.conj(values_[r.over], -r.sign, values_[r.u_out]);
        descend(k + 1);
        return;
      }
      case Step::Kind::Check: {
        if (holds(rels[s.relation])) descend(k + 1);
        return;
      }
    }
  }

  bool holds(const Relation& r) const {
    return alg_.conj(values_[r.over], r.sign, values_[r.u_in]) == values_[r.u_out];
  }

  void leaf() {
    for (const Relation& r : spec_.presentation.relations)
      if (!holds(r)) return;

    ++acc_.homs;
    std::vector<Permutation> images;
    images.reserve(values_.size());
    for (std::uint32_t v : values_) images.push_back(cls_.members()[v]);

    std::vector<Permutation> distinct = images;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    bool epi = generates_order_at_least(spec_.group.degree(), distinct, group_order_);
    if (epi) ++acc_.epis;

    if (spec_.collect_longitudes && (epi || !spec_.epi_only))
      ++acc_.longitudes[evaluate_word(spec_.presentation.longitude, images)];
  }

  const SearchSpec& spec_;
  const Schedule& plan_;
  const ConjClass& cls_;
  const ClassAlgebra& alg_;
  std::uint32_t meridian_index_;
  std::vector<std::uint32_t> values_;
  std::uint64_t group_order_;
  std::size_t first_branch_;
  std::uint32_t offset_ = 0, stride_ = 1;
  Accumulator acc_;
};

}  // namespace

HomCountReport count_homs(const SearchSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  const PermGroup& group = spec.group;
  const WirtingerPresentation& p = spec.presentation;
  if (spec.meridian_image.degree() != group.degree())
    throw InvalidInput("meridian image has degree " + std::to_string(spec.meridian_image.degree()) +
                       ", group has degree " + std::to_string(group.degree()));
  if (!group.contains(spec.meridian_image))
    throw InvalidInput("meridian image " + spec.meridian_image.to_cycles() +
                       " is not an element of the group");

  ConjClass cls = conjugacy_class(group, spec.meridian_image);
  ClassAlgebra alg(cls);
  Schedule plan = plan_order(p, p.meridian);
  auto meridian_index = static_cast<std::uint32_t>(cls.index_of(spec.meridian_image));

  unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : spec.threads;
  if (plan.branching_depth() == 0) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cls.size()));

  Accumulator total;
  if (threads <= 1) {
    total = Searcher(spec, plan, cls, alg, meridian_index).run(0, 1);
  } else {
    std::vector<Accumulator> parts(threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
          parts[t] = Searcher(spec, plan, cls, alg, meridian_index).run(t, threads);
        });
    }
    for (const Accumulator& a : parts) total.merge(a);
  }

  HomCountReport report;
  report.hom_count = total.homs;
  report.epi_count = total.epis;
  report.longitude_breakdown = std::move(total.longitudes);
  report.breakdown_is_epi_only = spec.epi_only;
  report.nodes_visited = total.nodes;
  report.class_size = cls.size();
  report.branching_depth = plan.branching_depth();
  try {
    if (group.has_trivial_center()) {
      std::uint64_t c = group.order() / cls.size();
      if (report.epi_count % c == 0) report.orbit_count = report.epi_count / c;
    }
  } catch (const ComputeError&) {
    // center not computable at this size; orbit_count stays empty
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::uint64_t orbit_reduce(const HomCountReport& report, const PermGroup& group,
                           const Permutation& x) {
  if (!group.has_trivial_center())
    throw ComputeError("orbit reduction needs a group with trivial center");
  std::uint64_t c = centralizer_order(group, x);
  if (report.epi_count % c != 0)
    throw ComputeError("epimorphism count " + std::to_string(report.epi_count) +
                       " is not divisible by the centralizer order " + std::to_string(c));
  return report.epi_count / c;
}

std::string to_string(Verdict v) {
  return v == Verdict::NonInvertible ? "NonInvertible" : "Inconclusive";
}

InvertibilityResult invertibility_test(const WirtingerPresentation& p, const PermGroup& group,
                                       const Permutation& x, unsigned threads) {
  InvertibilityResult result;
  SearchSpec spec{p, group, x, false, true, threads};
  result.forward = count_homs(spec);
  Permutation x_inv = x.inverse();
  if (x_inv == x) {
    result.inverse = result.forward;
  } else {
    spec.meridian_image = x_inv;
    result.inverse = count_homs(spec);
  }

  const HomCountReport& f = result.forward;
  const HomCountReport& b = result.inverse;
  auto mismatch = [&](std::string why) {
    result.verdict = Verdict::NonInvertible;
    result.reason = std::move(why);
  };
  if (f.hom_count != b.hom_count) {
    mismatch("homomorphism counts differ: " + std::to_string(f.hom_count) + " at g, " +
             std::to_string(b.hom_count) + " at g^-1");
    return result;
  }
  if (f.epi_count != b.epi_count) {
    mismatch("epimorphism counts differ: " + std::to_string(f.epi_count) + " at g, " +
             std::to_string(b.epi_count) + " at g^-1");
    return result;
  }
  auto count_at = [](const std::map<Permutation, std::uint64_t>& m, const Permutation& h) {
    auto it = m.find(h);
    return it == m.end() ? std::uint64_t{0} : it->second;
  };
  for (const auto& [h, c] : f.longitude_breakdown) {
    std::uint64_t other = count_at(b.longitude_breakdown, h.inverse());
    if (c != other) {
      mismatch("longitude counts differ: (g, " + h.to_cycles() + ") -> " + std::to_string(c) +
               ", (g^-1, h^-1) -> " + std::to_string(other));
      return result;
    }
  }
  for (const auto& [h, c] : b.longitude_breakdown) {
    if (count_at(f.longitude_breakdown, h.inverse()) != c) {
      mismatch("longitude counts differ at (g^-1, " + h.to_cycles() + ")");
      return result;
    }
  }
  return result;
}

}  // namespace kinv
