#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rough/approximation.hpp"
#include "rough/information_system.hpp"
#include "rough/rational.hpp"

namespace rough {

/// Simple undirected graph whose vertices carry a membership value in [0,1].
/// No self-loops, no parallel edges, {a,b} == {b,a}. Vertices keep insertion
/// order; zero-membership vertices are ordinary vertices, never pruned.
/// Immutable after construction.
class RoughGraph {
 public:
  RoughGraph() = default;  // the empty graph

  /// Validates and builds: ids unique and non-empty, memberships in [0,1],
  /// edge endpoints present, self-loops rejected. Repeated edges collapse.
  static RoughGraph create(std::vector<std::pair<std::string, Rational>> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<std::string>& vertex_ids() const { return ids_; }
  bool has_vertex(const std::string& id) const { return index_.contains(id); }
  std::size_t index_of(const std::string& id) const;
  const std::string& id_at(std::size_t index) const { return ids_[index]; }

  const Rational& omega(const std::string& id) const;
  const Rational& omega_at(std::size_t index) const { return vertices_[index].second; }

  bool has_edge(const std::string& a, const std::string& b) const;
  /// Adjacent vertex indices in insertion order.
  const std::set<std::size_t>& adjacent_to(std::size_t index) const { return adj_[index]; }
  std::vector<std::string> neighbors(const std::string& id) const;

  std::size_t degree(const std::string& id) const;
  std::size_t max_degree() const;  // rejects the empty graph
  std::size_t min_degree() const;  // rejects the empty graph
  bool is_regular() const;         // max and min degree coincide
  /// True iff every pair of vertices is adjacent, i.e. |E| = n(n-1)/2.
  bool is_complete() const;
  bool is_connected() const;  // rejects the empty graph; a single vertex is connected
  /// True iff no vertex has degree exactly 1.
  bool is_pendant_free() const;

  /// Edges as (min id, max id) pairs, sorted lexicographically.
  std::vector<std::pair<std::string, std::string>> sorted_edges() const;

 private:
  std::vector<std::pair<std::string, Rational>> vertices_;
  std::vector<std::string> ids_;  // parallel to vertices_
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::set<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// Builds the rough graph of a membership map: one vertex per object, and an
/// edge {u,v} whenever max(ω(u), ω(v)) > 0. Zero-membership vertices stay in
/// the graph and end up mutually non-adjacent, so the result is a split
/// graph: positives form a clique, zeros an independent set.
RoughGraph from_membership(const MembershipMap& m);

/// One-call pipeline: partition by `attributes`, take the target set, compute
/// memberships, build the graph.
RoughGraph from_information_system(const InformationSystem& sys,
                                   const std::vector<std::string>& attributes,
                                   const DecisionValue& selector);
RoughGraph from_information_system(const InformationSystem& sys,
                                   const std::vector<std::string>& attributes,
                                   const IdList& selector);

/// K_n with the given memberships. At most one weight may be zero — with two
/// zeros the max rule could never produce all edges, so such inputs are
/// rejected rather than emitting a graph no membership map can realize.
RoughGraph generate_complete(std::size_t n, const std::vector<Rational>& weights,
                             const std::string& id_prefix = "v");

/// Path v1–v2–…–vn. Weights must be ≥ 1/2 so the generated sequence is
/// itself a rough path.
RoughGraph generate_path(std::size_t n, const std::vector<Rational>& weights,
                         const std::string& id_prefix = "v");

/// Cycle v1–…–vn–v1, n ≥ 3. Same weight constraint as generate_path.
RoughGraph generate_cycle(std::size_t n, const std::vector<Rational>& weights,
                          const std::string& id_prefix = "v");

}  // namespace rough
