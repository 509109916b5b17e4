// kinv: knot invertibility experiments from the command line.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
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

namespace {

using json = nlohmann::ordered_json;
using namespace kinv;

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Diagram resolve_knot(const std::string& arg) {
  if (arg.rfind("X[", 0) == 0) return parse_pd(arg, "pd");
  try {
    return table_lookup(arg);
  } catch (const InvalidInput& e) {
    if (std::string(e.what()).rfind("unknown knot", 0) == 0) throw UsageError(e.what());
    throw;
  }
}

struct ClassChoice {
  std::optional<std::uint64_t> order;
  std::string rep;
};

Permutation resolve_rep(const PermGroup& g, const ClassChoice& c) {
  if (!c.rep.empty()) {
    Permutation x = parse_cycles(c.rep, g.degree());
    if (!g.contains(x)) throw InvalidInput("class representative " + c.rep + " is not in the group");
    return x;
  }
  if (!c.order) throw UsageError("one of --class-order or --class-rep is required");
  auto x = find_class_rep(g, *c.order);
  if (!x) throw ComputeError("group has no element of order " + std::to_string(*c.order));
  return *x;
}

json knot_json(const Diagram& d) {
  return {{"name", d.name()},
          {"pd", d.to_pd()},
          {"crossings", d.crossing_count()},
          {"writhe", writhe(d)}};
}

json group_json(const PermGroup& g) {
  return {{"name", g.name()}, {"degree", g.degree()}, {"order", g.order()}};
}

json class_json(const PermGroup& g, const Permutation& x) {
  ConjClass cls = conjugacy_class(g, x);
  return {{"representative", x.to_cycles()},
          {"element_order", element_order(x)},
          {"size", cls.size()},
          {"centralizer_order", g.order() / cls.size()},
          {"inverse_in_class", cls.contains(x.inverse())}};
}

json report_json(const HomCountReport& r) {
  json longitudes = json::array();
  for (const auto& [h, c] : r.longitude_breakdown)
    longitudes.push_back({{"h", h.to_cycles()}, {"count", c}});
  json j = {{"hom_count", r.hom_count},
            {"epi_count", r.epi_count},
            {"orbit_count", r.orbit_count ? json(*r.orbit_count) : json(nullptr)},
            {"class_size", r.class_size},
            {"branching_depth", r.branching_depth},
            {"nodes_visited", r.nodes_visited},
            {"longitudes_epi_only", r.breakdown_is_epi_only},
            {"longitudes", longitudes},
            {"elapsed_ms", r.elapsed_ms}};
  return j;
}

void print_report_text(std::ostream& out, const HomCountReport& r, const std::string& indent = "") {
  out << indent << "homomorphisms: " << r.hom_count << '\n';
  out << indent << "epimorphisms: " << r.epi_count << '\n';
  if (r.orbit_count) out << indent << "epimorphisms up to conjugacy: " << *r.orbit_count << '\n';
  if (!r.longitude_breakdown.empty()) {
    out << indent << "longitude images" << (r.breakdown_is_epi_only ? " (epimorphisms)" : "")
        << ":\n";
    for (const auto& [h, c] : r.longitude_breakdown)
      out << indent << "  " << h.to_cycles() << "  " << c << '\n';
  }
  out << indent << "branching depth: " << r.branching_depth << ", nodes visited: "
      << r.nodes_visited << '\n';
  out << indent << "elapsed: " << r.elapsed_ms << " ms\n";
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot invertibility via finite group quotients"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string knot_arg, group_arg;
  ClassChoice choice;
  bool as_json = false, epi_only = false, longitudes = false, check_inverse = false;
  unsigned threads = 1;

  auto* knots = app.add_subcommand("knots", "List the bundled knot table");

  auto* info = app.add_subcommand("info", "Crossings, writhe and arc count");
  info->add_option("knot", knot_arg, "Table name or PD code")->required();

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation and its checks");
  wirt->add_option("knot", knot_arg, "Table name or PD code")->required();

  auto* alex = app.add_subcommand("alexander", "Normalized Alexander polynomial");
  alex->add_option("knot", knot_arg, "Table name or PD code")->required();

  auto* jon = app.add_subcommand("jones", "Jones polynomial");
  jon->add_option("knot", knot_arg, "Table name or PD code")->required();
  jon->add_flag("--check-inverse", check_inverse, "Also compare with the reversed knot");

  auto add_search_options = [&](CLI::App* sub, bool full) {
    sub->add_option("knot", knot_arg, "Table name or PD code")->required();
    sub->add_option("--group", group_arg, "Bundled group name or group file")->required();
    auto* ord = sub->add_option("--class-order", choice.order, "Meridian image: first element of this order");
    auto* rep = sub->add_option("--class-rep", choice.rep, "Meridian image in cycle notation");
    ord->excludes(rep);
    if (full) {
      sub->add_flag("--epi-only", epi_only, "Longitude breakdown over epimorphisms only");
      sub->add_flag("--longitudes", longitudes, "Report the longitude breakdown");
    }
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)");
  };
  auto* hom = app.add_subcommand("homcount", "Count homomorphisms to a permutation group");
  add_search_options(hom, true);
  auto* inv = app.add_subcommand("invert-test", "Compare counts at g and g^-1");
  add_search_options(inv, false);

  for (auto* sub : {info, wirt, alex, jon, hom, inv}) sub->add_flag("--json", as_json, "Emit JSON");
  knots->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  json doc = {{"tool", "kinv"}, {"version", kVersion}, {"command", join_args(argc, argv)}};
  std::ostream& out = std::cout;
  try {
    if (*knots) {
      const KnotTable& table = default_knot_table();
      json list = json::array();
      for (const auto& name : table.names()) {
        const Diagram& d = table.lookup(name);
        list.push_back({{"name", name}, {"crossings", d.crossing_count()}});
        if (!as_json) out << name << "  " << d.crossing_count() << " crossings\n";
      }
      doc["knots"] = list;
    } else if (*info) {
      Diagram d = resolve_knot(knot_arg);
      WirtingerPresentation p = presentation(d);
      doc["knot"] = knot_json(d);
      doc["arcs"] = p.arc_count;
      if (!as_json)
        out << "knot: " << d.name() << "\ncrossings: " << d.crossing_count()
            << "\nwrithe: " << writhe(d) << "\narcs: " << p.arc_count << '\n';
    } else if (*wirt) {
      Diagram d = resolve_knot(knot_arg);
      WirtingerPresentation p = presentation(d);
      doc["knot"] = knot_json(d);
      doc["presentation"] = to_string(p);
      json checks = json::array();
      for (const CheckResult& c : validate(p))
        checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc["checks"] = checks;
      if (!as_json) {
        out << to_string(p) << "checks:\n";
        for (const CheckResult& c : validate(p))
          out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << ": " << c.detail << '\n';
      }
    } else if (*alex) {
      Diagram d = resolve_knot(knot_arg);
      LaurentPoly delta = alexander_poly(presentation(d));
      doc["knot"] = knot_json(d);
      doc["alexander"] = delta.to_string("t");
      doc["symmetric"] = is_symmetric(delta);
      if (!as_json)
        out << delta.to_string("t") << "\nsymmetric: " << (is_symmetric(delta) ? "true" : "false")
            << '\n';
    } else if (*jon) {
      Diagram d = resolve_knot(knot_arg);
      LaurentPoly v = jones(d);
      doc["knot"] = knot_json(d);
      doc["jones"] = v.to_string("t");
      if (!as_json) out << v.to_string("t") << '\n';
      if (check_inverse) {
        LaurentPoly vr = jones(reverse(d));
        doc["jones_reversed"] = vr.to_string("t");
        doc["reverse_equal"] = vr == v;
        if (!as_json)
          out << "reversed: " << vr.to_string("t") << "\nequal: " << (vr == v ? "true" : "false")
              << '\n';
      }
    } else if (*hom) {
      Diagram d = resolve_knot(knot_arg);
      PermGroup g = builtin_group(group_arg);
      Permutation x = resolve_rep(g, choice);
      SearchSpec spec{presentation(d), g, x, epi_only, longitudes || epi_only, threads};
      HomCountReport r = count_homs(spec);
      doc["knot"] = knot_json(d);
      doc["group"] = group_json(g);
      doc["class"] = class_json(g, x);
      doc["threads"] = threads;
      doc["result"] = report_json(r);
      if (!as_json) {
        out << "knot: " << d.name() << " (" << d.crossing_count() << " crossings)\n";
        out << "group: " << g.name() << " (degree " << g.degree() << ", order " << g.order() << ")\n";
        out << "meridian image: " << x.to_cycles() << " (order " << element_order(x)
            << ", class size " << r.class_size << ")\n";
        print_report_text(out, r);
      }
    } else if (*inv) {
      Diagram d = resolve_knot(knot_arg);
      PermGroup g = builtin_group(group_arg);
      Permutation x = resolve_rep(g, choice);
      InvertibilityResult res = invertibility_test(presentation(d), g, x, threads);
      doc["knot"] = knot_json(d);
      doc["group"] = group_json(g);
      doc["class"] = class_json(g, x);
      doc["threads"] = threads;
      doc["verdict"] = to_string(res.verdict);
      doc["reason"] = res.reason;
      doc["forward"] = report_json(res.forward);
      doc["inverse"] = report_json(res.inverse);
      try {
        doc["orbit_reduced"] = {{"forward", orbit_reduce(res.forward, g, x)},
                                {"inverse", orbit_reduce(res.inverse, g, x.inverse())}};
      } catch (const ComputeError&) {
        doc["orbit_reduced"] = nullptr;
      }
      if (!as_json) {
        out << "knot: " << d.name() << "\ngroup: " << g.name() << " (order " << g.order() << ")\n";
        out << "g = " << x.to_cycles() << " (order " << element_order(x) << ")\n";
        out << "meridian -> g:\n";
        print_report_text(out, res.forward, "  ");
        out << "meridian -> g^-1:\n";
        print_report_text(out, res.inverse, "  ");
        out << "verdict: " << to_string(res.verdict) << '\n';
        if (!res.reason.empty()) out << "reason: " << res.reason << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (as_json) out << doc.dump(2) << '\n';
  return 0;
}
