#include "rough/approximation.hpp"

#include <unordered_set>

#include "rough/errors.hpp"

namespace rough {

namespace {

void require_same_system(const Partition& p, const ObjectSet& g) {
  if (p.system_id() != g.system_id()) {
    throw InvalidInput("partition and object set come from different systems");
  }
}

// Collects the union of the selected blocks, ordered by system object order.
ObjectSet collect(const Partition& p, const std::unordered_set<std::size_t>& chosen) {
  std::vector<std::string> ids;
  for (const auto& id : p.universe()) {
    if (chosen.contains(p.block_index_of(id))) ids.push_back(id);
  }
  return detail::ObjectSetAccess::make(p.system_id(), std::move(ids));
}

std::size_t block_overlap(const std::vector<std::string>& block, const ObjectSet& g) {
  std::size_t count = 0;
  for (const auto& id : block) {
    if (g.contains(id)) ++count;
  }
  return count;
}

}  // namespace

MembershipMap MembershipMap::create(std::vector<std::pair<std::string, Rational>> values) {
  MembershipMap m;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& [id, omega] = values[i];
    if (id.empty()) throw InvalidInput("membership map: empty object id");
    if (!omega.in_unit_interval()) {
      throw InvalidInput("membership map: value " + omega.str() + " for '" + id +
                         "' is outside [0,1]");
    }
    if (!m.index_.emplace(id, i).second) {
      throw InvalidInput("membership map: duplicate object id '" + id + "'");
    }
  }
  m.values_ = std::move(values);
  return m;
}

const Rational& MembershipMap::at(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw InvalidInput("membership map has no object '" + id + "'");
  }
  return values_[it->second].second;
}

ObjectSet lower_approximation(const Partition& p, const ObjectSet& g) {
  require_same_system(p, g);
  std::unordered_set<std::size_t> chosen;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (block_overlap(p.blocks()[b], g) == p.blocks()[b].size()) chosen.insert(b);
  }
  return collect(p, chosen);
}

ObjectSet upper_approximation(const Partition& p, const ObjectSet& g) {
  require_same_system(p, g);
  std::unordered_set<std::size_t> chosen;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (block_overlap(p.blocks()[b], g) > 0) chosen.insert(b);
  }
  return collect(p, chosen);
}

ObjectSet boundary_region(const Partition& p, const ObjectSet& g) {
  require_same_system(p, g);
  std::unordered_set<std::size_t> chosen;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    const std::size_t overlap = block_overlap(p.blocks()[b], g);
    if (overlap > 0 && overlap < p.blocks()[b].size()) chosen.insert(b);
  }
  return collect(p, chosen);
}

ApproximationResult approximate(const Partition& p, const ObjectSet& g) {
  return {lower_approximation(p, g), upper_approximation(p, g), boundary_region(p, g)};
}

Rational membership(const Partition& p, const ObjectSet& g, const std::string& object_id) {
  require_same_system(p, g);
  if (g.empty()) {
    throw InvalidInput("membership target set must be non-empty");
  }
  const auto& block = p.block_of(object_id);  // throws on unknown id
  return Rational(static_cast<std::int64_t>(block_overlap(block, g)),
                  static_cast<std::int64_t>(block.size()));
}

MembershipMap membership_map(const Partition& p, const ObjectSet& g) {
  std::vector<std::pair<std::string, Rational>> values;
  values.reserve(p.universe().size());
  for (const auto& id : p.universe()) {
    values.emplace_back(id, membership(p, g, id));
  }
  return MembershipMap::create(std::move(values));
}

}  // namespace rough
