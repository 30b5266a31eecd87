#include "rough/rough_graph.hpp"

#include <algorithm>

#include "rough/errors.hpp"

namespace rough {

RoughGraph RoughGraph::create(
    std::vector<std::pair<std::string, Rational>> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  RoughGraph g;
  g.vertices_ = std::move(vertices);
  g.ids_.reserve(g.vertices_.size());
  g.adj_.resize(g.vertices_.size());
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    const auto& [id, omega] = g.vertices_[i];
    if (id.empty()) throw InvalidInput("vertex id is empty");
    if (!omega.in_unit_interval()) {
      throw InvalidInput("vertex '" + id + "' has membership " + omega.str() +
                         " outside [0,1]");
    }
    if (!g.index_.emplace(id, i).second) {
      throw InvalidInput("duplicate vertex id '" + id + "'");
    }
    g.ids_.push_back(id);
  }
  for (const auto& [a, b] : edges) {
    const std::size_t i = g.index_of(a);
    const std::size_t j = g.index_of(b);
    if (i == j) throw InvalidInput("self-loop on vertex '" + a + "'");
    if (g.adj_[i].insert(j).second) {
      g.adj_[j].insert(i);
      ++g.edge_count_;
    }
  }
  return g;
}

std::size_t RoughGraph::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw InvalidInput("unknown vertex '" + id + "'");
  }
  return it->second;
}

const Rational& RoughGraph::omega(const std::string& id) const {
  return vertices_[index_of(id)].second;
}

bool RoughGraph::has_edge(const std::string& a, const std::string& b) const {
  return adj_[index_of(a)].contains(index_of(b));
}

std::vector<std::string> RoughGraph::neighbors(const std::string& id) const {
  std::vector<std::string> out;
  for (std::size_t j : adj_[index_of(id)]) out.push_back(ids_[j]);
  return out;
}

std::size_t RoughGraph::degree(const std::string& id) const {
  return adj_[index_of(id)].size();
}

std::size_t RoughGraph::max_degree() const {
  if (vertices_.empty()) throw InvalidInput("degree of an empty graph");
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

std::size_t RoughGraph::min_degree() const {
  if (vertices_.empty()) throw InvalidInput("degree of an empty graph");
  std::size_t best = adj_.front().size();
  for (const auto& a : adj_) best = std::min(best, a.size());
  return best;
}

bool RoughGraph::is_regular() const { return max_degree() == min_degree(); }

bool RoughGraph::is_complete() const {
  const std::size_t n = vertex_count();
  if (n < 2) return true;
  return edge_count_ == n * (n - 1) / 2;
}

bool RoughGraph::is_connected() const {
  if (vertices_.empty()) throw InvalidInput("connectivity of an empty graph");
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == vertices_.size();
}

bool RoughGraph::is_pendant_free() const {
  return std::none_of(adj_.begin(), adj_.end(),
                      [](const auto& a) { return a.size() == 1; });
}

std::vector<std::pair<std::string, std::string>> RoughGraph::sorted_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::size_t j : adj_[i]) {
      if (i < j) {
        auto [lo, hi] = std::minmax(ids_[i], ids_[j]);
        out.emplace_back(lo, hi);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RoughGraph from_membership(const MembershipMap& m) {
  if (m.empty()) throw InvalidInput("membership map is empty");
  std::vector<std::pair<std::string, Rational>> vertices(m.values().begin(),
                                                         m.values().end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!vertices[i].second.is_zero() || !vertices[j].second.is_zero()) {
        edges.emplace_back(vertices[i].first, vertices[j].first);
      }
    }
  }
  return RoughGraph::create(std::move(vertices), edges);
}

namespace {

template <typename Selector>
RoughGraph build_from_system(const InformationSystem& sys,
                             const std::vector<std::string>& attributes,
                             const Selector& selector) {
  const Partition p = partition(sys, attributes);
  const ObjectSet g = target_set(sys, selector);
  return from_membership(membership_map(p, g));
}

std::vector<std::pair<std::string, Rational>> make_vertices(
    std::size_t n, const std::vector<Rational>& weights, const std::string& id_prefix,
    bool require_half) {
  if (n == 0) throw InvalidInput("vertex count must be positive");
  if (weights.size() != n) {
    throw InvalidInput("expected " + std::to_string(n) + " weights, got " +
                       std::to_string(weights.size()));
  }
  const Rational half(1, 2);
  std::vector<std::pair<std::string, Rational>> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!weights[i].in_unit_interval()) {
      throw InvalidInput("weight " + weights[i].str() + " is outside [0,1]");
    }
    if (require_half && weights[i] < half) {
      throw InvalidInput("weight " + weights[i].str() + " is below the rough threshold 1/2");
    }
    vertices.emplace_back(id_prefix + std::to_string(i + 1), weights[i]);
  }
  return vertices;
}

}  // namespace

RoughGraph from_information_system(const InformationSystem& sys,
                                   const std::vector<std::string>& attributes,
                                   const DecisionValue& selector) {
  return build_from_system(sys, attributes, selector);
}

RoughGraph from_information_system(const InformationSystem& sys,
                                   const std::vector<std::string>& attributes,
                                   const IdList& selector) {
  return build_from_system(sys, attributes, selector);
}

RoughGraph generate_complete(std::size_t n, const std::vector<Rational>& weights,
                             const std::string& id_prefix) {
  auto vertices = make_vertices(n, weights, id_prefix, /*require_half=*/false);
  const auto zeros = std::count_if(weights.begin(), weights.end(),
                                   [](const Rational& w) { return w.is_zero(); });
  if (zeros > 1) {
    throw InvalidInput("a complete rough graph admits at most one zero weight, got " +
                       std::to_string(zeros));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(vertices[i].first, vertices[j].first);
    }
  }
  return RoughGraph::create(std::move(vertices), edges);
}

RoughGraph generate_path(std::size_t n, const std::vector<Rational>& weights,
                         const std::string& id_prefix) {
  auto vertices = make_vertices(n, weights, id_prefix, /*require_half=*/true);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(vertices[i].first, vertices[i + 1].first);
  }
  return RoughGraph::create(std::move(vertices), edges);
}

RoughGraph generate_cycle(std::size_t n, const std::vector<Rational>& weights,
                          const std::string& id_prefix) {
  if (n < 3) {
    throw InvalidInput("a cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  auto vertices = make_vertices(n, weights, id_prefix, /*require_half=*/true);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(vertices[i].first, vertices[i + 1].first);
  }
  edges.emplace_back(vertices[n - 1].first, vertices[0].first);
  return RoughGraph::create(std::move(vertices), edges);
}

}  // namespace rough
