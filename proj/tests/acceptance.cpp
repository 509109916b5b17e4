// Acceptance suite: one PASS/FAIL line per criterion. Criterion 10 is
// reported but does not affect the exit status.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kinv/alexander.hpp"
#include "kinv/bracket.hpp"
#include "kinv/diagram.hpp"
#include "kinv/error.hpp"
#include "kinv/group.hpp"
#include "kinv/homsearch.hpp"
#include "kinv/wirtinger.hpp"
#include "oracle.hpp"

using namespace kinv;

namespace {

const std::vector<std::string> kKnots = {"unknot", "3_1", "4_1", "8_17", "conway", "kt"};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

HomCountReport count(const Diagram& d, const PermGroup& g, const Permutation& x, unsigned threads = 1) {
  return count_homs(SearchSpec{presentation(d), g, x, false, true, threads});
}

Outcome m11_order() {
  auto t0 = Clock::now();
  PermGroup g = builtin_group("m11");
  std::uint64_t n = g.order();
  double s = seconds_since(t0);
  std::ostringstream out;
  out << "order " << n << " in " << s << " s";
  return {n == 7920 && s < 1.0, out.str()};
}

Outcome class_asymmetry() {
  PermGroup g = builtin_group("m11");
  auto x = find_class_rep(g, 11);
  if (!x) return {false, "no element of order 11"};
  ConjClass c = conjugacy_class(g, *x);
  bool inv = c.contains(x->inverse());
  std::ostringstream out;
  out << "|class(g)| = " << c.size() << ", g^-1 in class: " << (inv ? "yes" : "no");
  return {c.size() == 720 && !inv, out.str()};
}

Outcome headline() {
  PermGroup g = builtin_group("m11");
  Permutation x = *find_class_rep(g, 11);
  auto t0 = Clock::now();
  InvertibilityResult r = invertibility_test(presentation(table_lookup("conway")), g, x, 1);
  double s = seconds_since(t0);
  std::uint64_t a = r.forward.epi_count, b = r.inverse.epi_count;
  bool counts = (a == 11 && b == 0) || (a == 0 && b == 11);
  std::uint64_t orbits = a == 11 ? orbit_reduce(r.forward, g, x) : orbit_reduce(r.inverse, g, x.inverse());
  std::ostringstream out;
  out << to_string(r.verdict) << ", epis {" << a << ", " << b << "}, orbit count " << orbits << ", "
      << s << " s";
  return {r.verdict == Verdict::NonInvertible && counts && orbits == 1 && s < 600, out.str()};
}

Outcome metabelian() {
  bool ok = true;
  std::ostringstream out;
  for (const auto& name : kKnots) {
    LaurentPoly a = alexander_poly(presentation(table_lookup(name)));
    // palindromic, checked coefficient by coefficient
    const auto& c = a.coeffs();
    bool palin = true;
    for (std::size_t i = 0; i < c.size(); ++i) palin = palin && c[i] == c[c.size() - 1 - i];
    bool unit = abs(a.evaluate(1)) == 1;
    ok = ok && palin && unit;
    if (name == "conway") ok = ok && a == LaurentPoly(1);
    out << name << ": " << a.to_string() << (palin ? "" : " (not palindromic)") << "; ";
  }
  return {ok, out.str()};
}

Outcome quantum() {
  bool ok = true;
  std::ostringstream out;
  for (const auto& name : kKnots) {
    Diagram d = table_lookup(name);
    bool eq = jones(reverse(d)) == jones(d);
    ok = ok && eq;
    if (!eq) out << name << " differs under reversal; ";
  }
  bool mutants = jones(table_lookup("conway")) == jones(table_lookup("kt"));
  ok = ok && mutants;
  out << "V(K) = V(-K) for all " << kKnots.size() << " table knots"
      << (mutants ? ", V(conway) = V(kt)" : ", V(conway) != V(kt)");
  return {ok, out.str()};
}

Outcome oracle_equivalence() {
  bool ok = true;
  int compared = 0;
  std::ostringstream out;
  for (const char* group : {"s3", "s4", "d4"}) {
    PermGroup g = builtin_group(group);
    auto elems = oracle::closure(g.degree(), g.generators());
    for (const char* knot : {"3_1", "4_1"}) {
      Diagram d = table_lookup(knot);
      oracle::PD pd;
      for (const auto& c : d.crossings()) pd.push_back(c.labels());
      std::set<Permutation> covered;
      for (const auto& x : elems) {
        if (covered.count(x)) continue;
        for (const auto& y : oracle::conj_class(elems, x)) covered.insert(y);
        oracle::Counts want = oracle::count(pd, g.generators(), x);
        HomCountReport got = count(d, g, x);
        ++compared;
        if (got.hom_count != want.homs || got.epi_count != want.epis) {
          ok = false;
          out << knot << "/" << group << "/" << x.to_cycles() << " differs; ";
        }
      }
    }
  }
  PermGroup s3 = builtin_group("s3");
  HomCountReport t = count(table_lookup("3_1"), s3, parse_cycles("(1,2)", 3));
  bool pinned = t.hom_count == 3 && t.epi_count == 2;
  out << compared << " (knot, group, class) cases agree; 3_1/S3 hom " << t.hom_count << " epi "
      << t.epi_count;
  return {ok && pinned, out.str()};
}

Outcome soundness() {
  bool ok = true;
  std::ostringstream out;
  PermGroup m11 = builtin_group("m11");
  PermGroup s3 = builtin_group("s3");
  std::vector<std::pair<const PermGroup*, Permutation>> targets = {
      {&m11, *find_class_rep(m11, 11)},
      {&s3, parse_cycles("(1,2)", 3)},
      {&s3, parse_cycles("(1,2,3)", 3)}};
  for (const char* knot : {"3_1", "4_1"})
    for (const auto& [g, x] : targets) {
      Verdict v = invertibility_test(presentation(table_lookup(knot)), *g, x).verdict;
      out << knot << "/" << g->name() << "/" << x.to_cycles() << ": " << to_string(v) << "; ";
      ok = ok && v == Verdict::Inconclusive;
    }
  return {ok, out.str()};
}

bool same_counts(const HomCountReport& a, const HomCountReport& b) {
  return a.hom_count == b.hom_count && a.epi_count == b.epi_count &&
         a.longitude_breakdown.size() == b.longitude_breakdown.size();
}

Outcome determinism() {
  PermGroup g = builtin_group("m11");
  Permutation x = *find_class_rep(g, 11);
  Diagram d = table_lookup("conway");
  HomCountReport base = count(d, g, x, 1);
  bool ok = true;
  std::ostringstream out;
  for (unsigned t : {2u, 8u}) {
    HomCountReport r = count(d, g, x, t);
    bool eq = same_counts(base, r) && r.longitude_breakdown == base.longitude_breakdown &&
              r.nodes_visited == base.nodes_visited;
    ok = ok && eq;
    out << "threads " << t << (eq ? " identical" : " DIFFER") << "; ";
  }
  // a second generating set: compare the pair of runs as an unordered pair,
  // since its first order-11 element may correspond to g^-1
  PermGroup alt = builtin_group("m11_alt");
  Permutation y = *find_class_rep(alt, 11);
  HomCountReport base_inv = count(d, g, x.inverse(), 1);
  HomCountReport alt_fwd = count(d, alt, y, 1);
  HomCountReport alt_inv = count(d, alt, y.inverse(), 1);
  auto key = [](const HomCountReport& r) { return std::pair{r.hom_count, r.epi_count}; };
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> m1{key(base), key(base_inv)};
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> m2{key(alt_fwd), key(alt_inv)};
  bool alt_ok = alt.order() == 7920 && m1 == m2;
  ok = ok && alt_ok;
  out << "second generating set " << (alt_ok ? "identical" : "DIFFERS") << " (hom, epi) = {("
      << base.hom_count << ", " << base.epi_count << "), (" << base_inv.hom_count << ", "
      << base_inv.epi_count << ")}";
  return {ok, out.str()};
}

Outcome determinants() {
  bool ok = true;
  std::ostringstream out;
  for (const auto& name : kKnots) {
    Diagram d = table_lookup(name);
    BigInt a = abs(alexander_poly(presentation(d)).evaluate(-1));
    BigInt v = abs(jones(d).evaluate(-1));
    ok = ok && a == v;
    out << name << " " << a << "/" << v << "; ";
  }
  return {ok, out.str()};
}

// One class per (group, knot). Aut(U3(3)) separates g from g^-1 on a real
// class of order 4. No class of Sz(8) does for either knot, so those two
// cases report Inconclusive and the criterion fails.
struct StretchCase {
  const char* group;
  const char* knot;
  std::uint64_t order;  // used when rep is empty
  const char* rep;
};

Outcome stretch() {
  std::vector<StretchCase> cases = {
      {"sz8", "conway", 13, ""},
      {"sz8", "kt", 13, ""},
      {"autu33", "conway", 0, "(5,14,8,26)(6,15,9,27)(7,16,10,28)(11,23,20,17)(12,24,21,18)(13,25,22,19)"},
      {"autu33", "kt", 0, "(5,14,8,26)(6,15,9,27)(7,16,10,28)(11,23,20,17)(12,24,21,18)(13,25,22,19)"},
  };
  bool ok = true;
  std::ostringstream out;
  for (const auto& c : cases) {
    out << c.knot << "/" << c.group << ": ";
    try {
      PermGroup g = builtin_group(c.group);
      if (!*c.rep && c.order == 0) {
        out << "no class configured; ";
        ok = false;
        continue;
      }
      Permutation x = *c.rep ? parse_cycles(c.rep, g.degree()) : *find_class_rep(g, c.order);
      auto t0 = Clock::now();
      Verdict v = invertibility_test(presentation(table_lookup(c.knot)), g, x).verdict;
      out << to_string(v) << " (" << seconds_since(t0) << " s); ";
      ok = ok && v == Verdict::NonInvertible;
    } catch (const Error& e) {
      out << e.what() << "; ";
      ok = false;
    }
  }
  return {ok, out.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool blocking;
  };
  std::vector<Criterion> criteria = {
      {1, "M11 order", m11_order, true},
      {2, "class asymmetry", class_asymmetry, true},
      {3, "Conway knot is not invertible (M11)", headline, true},
      {4, "metabelian blindness", metabelian, true},
      {5, "quantum blindness", quantum, true},
      {6, "oracle equivalence", oracle_equivalence, true},
      {7, "soundness on invertible knots", soundness, true},
      {8, "determinism and parallel safety", determinism, true},
      {9, "cross-invariant consistency", determinants, true},
      {10, "stretch: Sz(8) and Aut(U3(3)) (non-blocking)", stretch, false},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- "
              << o.detail << std::endl;
    if (!o.pass && c.blocking) ++failures;
  }
  std::cout << (failures == 0 ? "all blocking criteria passed" : "blocking criteria failed: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
