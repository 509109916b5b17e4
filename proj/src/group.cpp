#include "kinv/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "kinv/error.hpp"

#ifndef KINV_DEFAULT_DATA_DIR
#define KINV_DEFAULT_DATA_DIR "data"
#endif

namespace kinv {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ComputeError("group order overflows 64 bits");
  return r;
}

void require_degree(const Permutation& p, std::size_t degree, const char* what) {
  if (p.degree() != degree)
    throw InvalidInput(std::string(what) + ": permutation of degree " + std::to_string(p.degree()) +
                       " does not match group degree " + std::to_string(degree));
}

}  // namespace

// --- StabilizerChain -------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> gens,
                                 std::uint64_t order_limit)
    : degree_(degree), order_limit_(order_limit) {
  for (const Permutation& g : gens) {
    require_degree(g, degree, "stabilizer chain");
    if (limit_reached()) break;
    if (g.is_identity()) continue;
    auto [residue, level] = sift_from(g, 0);
    if (!residue.is_identity()) add_generator(0, g);
  }
  if (limit_reached()) complete_ = false;
}

bool StabilizerChain::limit_reached() const {
  return order_limit_ != 0 && order_at_least() >= order_limit_;
}

std::uint64_t StabilizerChain::order_at_least() const {
  std::uint64_t n = 1;
  for (const Level& l : levels_) n = checked_mul(n, l.orbit.size());
  return n;
}

std::uint64_t StabilizerChain::order() const {
  if (!complete_) throw ComputeError("stabilizer chain was truncated by an order limit");
  return order_at_least();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.base);
  return b;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift_from(Permutation g,
                                                               std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    int k = l.rep_index[g[l.base]];
    if (k < 0) return {std::move(g), i};
    g = l.reps_inv[k] * g;
  }
  return {std::move(g), levels_.size()};
}

Permutation StabilizerChain::sift(Permutation g) const {
  require_degree(g, degree_, "sift");
  return sift_from(std::move(g), 0).first;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift_from(g, 0).first.is_identity();
}

void StabilizerChain::add_generator(std::size_t i, const Permutation& g) {
  if (i == levels_.size()) {
    Level l;
    l.base = static_cast<Point>(g.first_moved());
    l.orbit = {l.base};
    l.reps = {Permutation::identity(degree_)};
    l.reps_inv = l.reps;
    l.rep_index.assign(degree_, -1);
    l.rep_index[l.base] = 0;
    levels_.push_back(std::move(l));
  }
  levels_[i].gens.push_back(g);

  // Orbit closure under the enlarged generating set.
  for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
      Level& l = levels_[i];
      Point y = l.gens[s][l.orbit[k]];
      if (l.rep_index[y] >= 0) continue;
      l.rep_index[y] = static_cast<int>(l.orbit.size());
      l.orbit.push_back(y);
      Permutation rep = l.gens[s] * l.reps[k];
      l.reps_inv.push_back(rep.inverse());
      l.reps.push_back(std::move(rep));
    }
  }
  if (limit_reached()) return;

  // Every Schreier generator must lie in the next level down.
  for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
      const Level& l = levels_[i];
      Point y = l.gens[s][l.orbit[k]];
      Permutation schreier = l.reps_inv[l.rep_index[y]] * l.gens[s] * l.reps[k];
      auto [residue, stop] = sift_from(std::move(schreier), i + 1);
      if (residue.is_identity()) continue;
      add_generator(i + 1, residue);
      if (limit_reached()) return;
    }
  }
}

// --- PermGroup -------------------------------------------------------------

namespace {

std::vector<Permutation> checked_generators(std::size_t degree, std::vector<Permutation> gens) {
  if (gens.empty()) throw InvalidInput("a group needs at least one generator");
  for (const Permutation& g : gens) require_degree(g, degree, "group generator");
  return gens;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree),
      generators_(checked_generators(degree, std::move(generators))),
      name_(std::move(name)),
      chain_(degree_, generators_) {}

bool PermGroup::has_trivial_center() const {
  constexpr std::uint64_t kEnumerationLimit = 5'000'000;
  if (order() > kEnumerationLimit)
    throw ComputeError("group too large to enumerate its center");
  bool trivial = true;
  chain_.for_each_element([&](const Permutation& z) {
    if (!trivial || z.is_identity()) return;
    for (const Permutation& g : generators_)
      if (z * g != g * z) return;
    trivial = false;
  });
  return trivial;
}

// --- ConjClass -------------------------------------------------------------

ConjClass::ConjClass(Permutation representative, std::vector<Permutation> sorted_members)
    : representative_(std::move(representative)), members_(std::move(sorted_members)) {
  index_.reserve(members_.size() * 2);
  for (std::size_t k = 0; k < members_.size(); ++k)
    index_.emplace(members_[k], static_cast<std::uint32_t>(k));
}

std::int64_t ConjClass::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

// --- free functions --------------------------------------------------------

std::uint64_t group_order(const PermGroup& group) { return group.order(); }

ConjClass conjugacy_class(const PermGroup& group, const Permutation& x) {
  require_degree(x, group.degree(), "conjugacy class");
  std::vector<Permutation> members{x};
  std::unordered_set<Permutation, PermutationHash> seen{x};
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const Permutation& c : group.generators()) {
      Permutation y = conjugate(members[k], c);
      if (seen.insert(y).second) members.push_back(std::move(y));
    }
  }
  std::sort(members.begin(), members.end());
  return ConjClass(x, std::move(members));
}

std::uint64_t centralizer_order(const PermGroup& group, const Permutation& x) {
  return group.order() / conjugacy_class(group, x).size();
}

std::uint64_t subgroup_order(std::size_t degree, std::span<const Permutation> gens) {
  return StabilizerChain(degree, gens).order();
}

bool generates_order_at_least(std::size_t degree, std::span<const Permutation> gens,
                              std::uint64_t target) {
  StabilizerChain chain(degree, gens, target);
  return chain.order_at_least() >= target;
}

std::optional<Permutation> find_class_rep(const PermGroup& group, std::uint64_t n) {
  if (n == 0) return std::nullopt;
  Permutation id = Permutation::identity(group.degree());
  if (n == 1) return id;
  if (group.order() % n != 0) return std::nullopt;
  std::unordered_set<Permutation, PermutationHash> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation e = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& s : group.generators()) {
      Permutation y = e * s;
      if (!seen.insert(y).second) continue;
      if (element_order(y) == n) return y;
      queue.push_back(std::move(y));
    }
  }
  return std::nullopt;
}

PermGroup parse_group_file(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!degree) {
      std::istringstream words(line);
      std::string key;
      long long n = -1;
      if (!(words >> key >> n) || key != "degree" || n < 1 ||
          static_cast<std::size_t>(n) > kMaxDegree)
        throw ParseError("group file line " + std::to_string(line_no) +
                         ": expected 'degree N' with 1 <= N <= 255");
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, *degree));
    } catch (const ParseError& e) {
      throw ParseError("group file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree) throw ParseError("group file has no 'degree N' line");
  if (gens.empty()) throw ParseError("group file lists no generators");
  return PermGroup(*degree, std::move(gens), std::move(name));
}

PermGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), path.stem().string());
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("KINV_DATA_DIR"); env && *env) return env;
  return KINV_DEFAULT_DATA_DIR;
}

PermGroup builtin_group(std::string_view name, const std::filesystem::path& data_dir) {
  std::filesystem::path bundled = data_dir / "groups" / (std::string(name) + ".grp");
  if (std::filesystem::exists(bundled)) return load_group_file(bundled);
  std::filesystem::path direct{std::string(name)};
  if (std::filesystem::is_regular_file(direct)) return load_group_file(direct);
  std::string known;
  if (std::filesystem::is_directory(data_dir / "groups")) {
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir / "groups"))
      if (entry.path().extension() == ".grp") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
  }
  throw InvalidInput("unknown group '" + std::string(name) + "' (bundled: " + known + ")");
}

}  // namespace kinv
