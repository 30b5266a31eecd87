#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rough/information_system.hpp"
#include "rough/rational.hpp"

namespace rough {

/// Total map object id -> membership value for one (partition, target) pair,
/// in system object order. All values lie in [0,1].
class MembershipMap {
 public:
  static MembershipMap create(std::vector<std::pair<std::string, Rational>> values);

  const std::vector<std::pair<std::string, Rational>>& values() const { return values_; }
  const Rational& at(const std::string& id) const;
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

 private:
  MembershipMap() = default;

  std::vector<std::pair<std::string, Rational>> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ApproximationResult {
  ObjectSet lower;
  ObjectSet upper;
  ObjectSet boundary;
};

/// Union of the partition's blocks wholly contained in g: the objects that
/// certainly belong to g.
ObjectSet lower_approximation(const Partition& p, const ObjectSet& g);

/// Union of the blocks that intersect g: the objects that possibly belong.
ObjectSet upper_approximation(const Partition& p, const ObjectSet& g);

/// upper \ lower — the region of uncertain membership.
ObjectSet boundary_region(const Partition& p, const ObjectSet& g);

ApproximationResult approximate(const Partition& p, const ObjectSet& g);

/// Rough membership of one object: |[f] ∩ G| / |[f]| as an exact fraction.
/// g must be non-empty.
Rational membership(const Partition& p, const ObjectSet& g, const std::string& object_id);

/// membership applied to every object, in system object order.
MembershipMap membership_map(const Partition& p, const ObjectSet& g);

}  // namespace rough
