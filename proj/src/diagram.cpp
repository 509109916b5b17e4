#include "kinv/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kinv/error.hpp"
#include "kinv/group.hpp"

namespace kinv {

namespace {

std::string term(const Crossing& x) {
  return "X[" + std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) +
         "," + std::to_string(x.d) + "]";
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::string name)
    : crossings_(std::move(crossings)), name_(std::move(name)) {
  const int edges = static_cast<int>(edge_count());
  std::vector<int> uses(edges + 1, 0), incoming(edges + 1, 0);

  for (const Crossing& x : crossings_) {
    auto l = x.labels();
    for (int e : l) {
      if (e < 1 || e > edges)
        throw InvalidInput(term(x) + ": edge label " + std::to_string(e) + " outside 1.." +
                           std::to_string(edges));
      if (++uses[e] > 2)
        throw InvalidInput(term(x) + ": edge " + std::to_string(e) + " appears more than twice");
    }
    if (x.a == x.c) throw InvalidInput(term(x) + ": under strand enters and leaves on one edge");
    if (x.c != next_edge(x.a))
      throw InvalidInput(term(x) + ": under strand " + std::to_string(x.a) + " -> " +
                         std::to_string(x.c) + " is not consecutive along the knot");
    if (edges > 2) {
      bool forward = x.d == next_edge(x.b);
      bool backward = x.b == next_edge(x.d);
      if (forward == backward)
        throw InvalidInput(term(x) + ": over-strand edges " + std::to_string(x.b) + ", " +
                           std::to_string(x.d) + " are not consecutive along the knot");
    }
  }
  for (int e = 1; e <= edges; ++e)
    if (uses[e] != 2)
      throw InvalidInput("edge " + std::to_string(e) + " appears " + std::to_string(uses[e]) +
                         " time(s); every edge must appear exactly twice");

  signs_.resize(crossings_.size());
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    ++incoming[crossings_[i].a];
    ++incoming[over_in(i)];
    signs_[i] = over_in(i) == crossings_[i].d ? +1 : -1;
  }
  for (int e = 1; e <= edges; ++e)
    if (incoming[e] != 1)
      throw InvalidInput("edge " + std::to_string(e) +
                         " does not end at exactly one crossing; orientation is inconsistent");
}

int Diagram::over_in(std::size_t i) const {
  const Crossing& x = crossings_[i];
  // With two edges both over labels succeed each other; the over pass is
  // entered on the edge the under pass leaves by.
  if (edge_count() == 2) return x.c;
  return x.d == next_edge(x.b) ? x.b : x.d;
}

int Diagram::over_out(std::size_t i) const {
  const Crossing& x = crossings_[i];
  return over_in(i) == x.b ? x.d : x.b;
}

std::string Diagram::to_pd() const {
  std::string out;
  for (const Crossing& x : crossings_) {
    if (!out.empty()) out += ' ';
    out += term(x);
  }
  return out;
}

std::vector<Crossing> Diagram::canonical() const {
  const int edges = static_cast<int>(edge_count());
  std::vector<Crossing> best = crossings_;
  std::sort(best.begin(), best.end());
  for (int k = 1; k < edges; ++k) {
    auto shift = [&](int e) { return (e - 1 + k) % edges + 1; };
    std::vector<Crossing> cand;
    cand.reserve(crossings_.size());
    for (const Crossing& x : crossings_)
      cand.push_back({shift(x.a), shift(x.b), shift(x.c), shift(x.d)});
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = std::move(cand);
  }
  return best;
}

Diagram parse_pd(std::string_view text, std::string name) {
  std::vector<Crossing> crossings;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 4 || tok.rfind("X[", 0) != 0 || tok.back() != ']')
      throw ParseError("malformed PD term '" + tok + "': expected X[a,b,c,d]");
    std::string_view body(tok);
    body = body.substr(2, body.size() - 3);
    std::array<int, 4> v{};
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      std::size_t end = k < 3 ? body.find(',', pos) : body.size();
      if (end == std::string_view::npos)
        throw ParseError("malformed PD term '" + tok + "': expected four labels");
      std::string_view num = body.substr(pos, end - pos);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v[k]);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw ParseError("malformed PD term '" + tok + "': '" + std::string(num) +
                         "' is not an integer");
      pos = end + 1;
    }
    crossings.push_back({v[0], v[1], v[2], v[3]});
  }
  return Diagram(std::move(crossings), std::move(name));
}

int writhe(const Diagram& d) {
  int w = 0;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) w += d.sign(i);
  return w;
}

Diagram reverse(const Diagram& d) {
  const int edges = static_cast<int>(d.edge_count());
  auto relabel = [&](int e) { return e == 1 ? 1 : edges + 2 - e; };
  std::vector<Crossing> out;
  out.reserve(d.crossing_count());
  for (const Crossing& x : d.crossings())
    out.push_back({relabel(x.c), relabel(x.d), relabel(x.a), relabel(x.b)});
  return Diagram(std::move(out), d.name());
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossing_count());
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    if (d.over_in(i) == x.b)
      out.push_back({x.b, x.c, x.d, x.a});
    else
      out.push_back({x.d, x.a, x.b, x.c});
  }
  return Diagram(std::move(out), d.name());
}

bool same_up_to_relabeling(const Diagram& x, const Diagram& y) {
  return x.crossing_count() == y.crossing_count() && x.canonical() == y.canonical();
}

KnotTable KnotTable::parse(std::string_view text) {
  KnotTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string name;
    if (!(words >> name)) continue;
    std::string rest;
    std::getline(words, rest);
    try {
      Diagram d = parse_pd(rest, name);
      if (!table.knots_.emplace(name, std::move(d)).second)
        throw ParseError("duplicate knot name '" + name + "'");
    } catch (const Error& e) {
      throw ParseError("knot table line " + std::to_string(line_no) + ": " + e.what());
    }
    table.order_.push_back(name);
  }
  return table;
}

KnotTable KnotTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read knot table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Diagram& KnotTable::lookup(std::string_view name) const {
  auto it = knots_.find(name);
  if (it != knots_.end()) return it->second;
  std::string known;
  for (const auto& n : order_) known += (known.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown knot '" + std::string(name) + "' (available: " + known + ")");
}

std::vector<std::string> KnotTable::names() const { return order_; }

const KnotTable& default_knot_table() {
  static const KnotTable table = KnotTable::load(default_data_dir() / "knots.txt");
  return table;
}

Diagram table_lookup(std::string_view name) { return default_knot_table().lookup(name); }

}  // namespace kinv
