#include "qcat/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace qcat {

// ---------------------------------------------------------------------------
// DAGs

namespace {

std::vector<std::string> find_cycle(const std::vector<std::string>& labels,
                                    const std::vector<std::vector<std::size_t>>& succ) {
  enum Color : std::uint8_t { White, Grey, Black };
  std::vector<Color> color(labels.size(), White);
  std::vector<std::size_t> stack;
  std::vector<std::string> cycle;
  auto dfs = [&](auto& self, std::size_t u) -> bool {
    color[u] = Grey;
    stack.push_back(u);
    for (auto v : succ[u]) {
      if (color[v] == Grey) {
        auto it = std::find(stack.begin(), stack.end(), v);
        for (; it != stack.end(); ++it) cycle.push_back(labels[*it]);
        cycle.push_back(labels[v]);
        return true;
      }
      if (color[v] == White && self(self, v)) return true;
    }
    stack.pop_back();
    color[u] = Black;
    return false;
  };
  for (std::size_t u = 0; u < labels.size(); ++u)
    if (color[u] == White && dfs(dfs, u)) break;
  return cycle;
}

}  // namespace

CausalDag::CausalDag(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), succ_(vertices_.size()) {
  std::set<std::string> labels;
  for (const auto& v : vertices_)
    if (!labels.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size()) throw InputError("edge refers to an unknown vertex");
    if (!seen.insert({a, b}).second)
      throw InputError("duplicate edge '" + vertices_[a] + " " + vertices_[b] + "'");
    succ_[a].push_back(b);
    ++indegree[b];
  }

  std::vector<std::size_t> ready;
  for (std::size_t v = vertices_.size(); v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto u = ready.back();
    ready.pop_back();
    topo_.push_back(u);
    for (auto v : succ_[u])
      if (--indegree[v] == 0) ready.push_back(v);
  }
  if (topo_.size() != vertices_.size()) {
    auto cycle = find_cycle(vertices_, succ_);
    std::string text;
    for (const auto& v : cycle) text += (text.empty() ? "" : " -> ") + v;
    throw CycleError("graph has a cycle: " + text, std::move(cycle));
  }
}

CausalDag CausalDag::from_labels(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  auto lookup = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, vertices.size());
    if (inserted) vertices.push_back(label);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = lookup(a);
    auto ib = lookup(b);
    idx.emplace_back(ia, ib);
  }
  return CausalDag(std::move(vertices), std::move(idx));
}

VCategory causal_space_from_dag(const CausalDag& dag) {
  const std::size_t n = dag.size();
  const auto& order = dag.topological_order();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  Matrix hom(n, n, QVal::bot());
  std::vector<std::int64_t> dist(n);
  constexpr std::int64_t unreachable = -1;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unreachable);
    dist[s] = 0;
    for (std::size_t i = position[s]; i < n; ++i) {
      const auto u = order[i];
      if (dist[u] == unreachable) continue;
      for (auto v : dag.successors(u)) dist[v] = std::max(dist[v], dist[u] + 1);
    }
    for (std::size_t t = 0; t < n; ++t)
      if (dist[t] != unreachable) hom(s, t) = QVal::finite(dist[t]);
  }
  return VCategory(Quantale::rbot(), dag.vertices(), std::move(hom));
}

std::optional<std::int64_t> longest_path_oracle(const CausalDag& dag, std::size_t from, std::size_t to,
                                                std::size_t max_paths) {
  if (from >= dag.size() || to >= dag.size()) throw InputError("vertex index out of range");
  std::optional<std::int64_t> best;
  std::size_t visited = 0;
  auto walk = [&](auto& self, std::size_t u, std::int64_t length) -> void {
    if (++visited > max_paths) throw std::length_error("path enumeration exceeded its budget");
    if (u == to) best = std::max(best.value_or(length), length);
    for (auto v : dag.successors(u)) self(self, v, length + 1);
  };
  walk(walk, from, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Minkowski 2D

QVal minkowski_interval(const Event2D& a, const Event2D& b) {
  const double dt = b.t - a.t;
  const double dx = std::abs(b.x - a.x);
  if (!(dt >= dx)) return QVal::bot();
  return QVal::finite(Scalar::approx(std::sqrt((dt - dx) * (dt + dx))));
}

VCategory minkowski_category(const std::vector<Event2D>& events) {
  const std::size_t n = events.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  Matrix hom(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom(i, j) = minkowski_interval(events[i], events[j]);
  return VCategory(Quantale::rbot(kMinkowskiTolerance), std::move(labels), std::move(hom));
}

MinkowskiSample minkowski_sample(std::size_t n, std::uint64_t seed, const Bounds2D& bounds) {
  const bool finite = std::isfinite(bounds.t0) && std::isfinite(bounds.t1) && std::isfinite(bounds.x0) &&
                      std::isfinite(bounds.x1);
  if (!finite || !(bounds.t0 < bounds.t1) || !(bounds.x0 < bounds.x1))
    throw InputError("degenerate bounds: need finite t0 < t1 and x0 < x1");
  std::mt19937_64 rng(seed);
  auto draw = [&](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  };
  std::vector<Event2D> events(n);
  for (auto& e : events) {
    e.t = draw(bounds.t0, bounds.t1);
    e.x = draw(bounds.x0, bounds.x1);
  }
  VCategory category = minkowski_category(events);
  return MinkowskiSample{std::move(events), std::move(category)};
}

// ---------------------------------------------------------------------------
// Mixed signature

double signed_interval(const Event2D& a, const Event2D& b) {
  const double dt = std::abs(b.t - a.t);
  const double dx = std::abs(b.x - a.x);
  if (dt > dx) return -std::sqrt((dt - dx) * (dt + dx));
  return std::sqrt((dx - dt) * (dx + dt));
}

MixedSignatureRecord mixed_signature_check() {
  MixedSignatureRecord r;
  r.d_ab = signed_interval(r.a, r.b);
  r.d_bc = signed_interval(r.b, r.c);
  r.d_ac = signed_interval(r.a, r.c);
  r.sum = r.d_ab + r.d_bc;
  r.violation = !(r.d_ac <= r.sum);
  return r;
}

}  // namespace qcat
