#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rough {

namespace detail {
struct ObjectSetAccess;
}

/// A finite set of objects described by categorical attribute values, with an
/// optional distinguished decision attribute. Values are opaque strings
/// compared by exact equality; cells are never interpreted numerically.
/// Immutable after construction.
class InformationSystem {
 public:
  /// Validates and builds a system. `rows[i]` holds object i's values for the
  /// condition attributes in order, followed by the decision value when a
  /// decision attribute is named. Rejects duplicate object ids, duplicate
  /// attribute names, a decision attribute that repeats a condition
  /// attribute, ragged rows, and empty cells.
  static InformationSystem create(std::vector<std::string> objects,
                                  std::vector<std::string> condition_attributes,
                                  std::optional<std::string> decision_attribute,
                                  std::vector<std::vector<std::string>> rows);

  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& condition_attributes() const {
    return condition_attributes_;
  }
  const std::optional<std::string>& decision_attribute() const { return decision_; }

  bool has_object(const std::string& id) const;
  std::size_t object_index(const std::string& id) const;
  bool has_attribute(const std::string& name) const;

  const std::string& value(const std::string& object_id,
                           const std::string& attribute) const;
  const std::string& value_at(std::size_t object_index,
                              const std::string& attribute) const;

  /// Identity token; partitions and object sets derived from this system
  /// carry it so cross-system mixups are rejected.
  std::uint64_t id() const { return id_; }

 private:
  InformationSystem() = default;

  std::vector<std::string> objects_;
  std::vector<std::string> condition_attributes_;
  std::optional<std::string> decision_;
  std::vector<std::vector<std::string>> cells_;  // row-major, decision column last
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> column_index_;
  std::uint64_t id_ = 0;
};

struct ParseOptions {
  /// When false, ids are 1-based row numbers and every column is an attribute.
  bool first_column_is_id = true;
  /// When false, the table has condition attributes only.
  bool has_decision = true;
  /// Names the decision column; default is the last column.
  std::optional<std::string> decision_column;
};

/// Parses a decision table from CSV: UTF-8, header line, comma-separated,
/// no quoting; cell whitespace is trimmed; blank lines are skipped.
InformationSystem parse_decision_table(std::istream& in, const ParseOptions& options = {});
InformationSystem parse_decision_table(const std::string& text,
                                       const ParseOptions& options = {});

/// The indiscernibility quotient of a system's objects under an attribute
/// subset: objects share a block iff they agree on every chosen attribute.
/// Blocks are ordered by their smallest contained object index, members by
/// input order, so all downstream output is reproducible.
class Partition {
 public:
  static Partition compute(const InformationSystem& sys,
                           const std::vector<std::string>& attributes);

  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
  std::size_t block_index_of(const std::string& object_id) const;
  const std::vector<std::string>& block_of(const std::string& object_id) const;

  /// Object ids in system order.
  const std::vector<std::string>& universe() const { return universe_; }
  std::uint64_t system_id() const { return system_id_; }

 private:
  Partition() = default;

  std::uint64_t system_id_ = 0;
  std::vector<std::string> universe_;
  std::vector<std::vector<std::string>> blocks_;
  std::unordered_map<std::string, std::size_t> block_index_;
};

Partition partition(const InformationSystem& sys,
                    const std::vector<std::string>& attributes);

/// A subset of one system's objects, kept in system object order.
class ObjectSet {
 public:
  /// Validates ids against the system; duplicates collapse.
  static ObjectSet create(const InformationSystem& sys,
                          const std::vector<std::string>& ids);

  const std::vector<std::string>& ids() const { return ids_; }
  bool contains(const std::string& id) const { return lookup_.contains(id); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::uint64_t system_id() const { return system_id_; }

 private:
  friend struct detail::ObjectSetAccess;
  ObjectSet() = default;

  std::uint64_t system_id_ = 0;
  std::vector<std::string> ids_;
  std::unordered_set<std::string> lookup_;
};

namespace detail {
// Library-internal factory for sets whose members are already validated and
// ordered (approximation results).
struct ObjectSetAccess {
  static ObjectSet make(std::uint64_t system_id, std::vector<std::string> ordered_ids);
};
}  // namespace detail

/// Selects the objects whose decision value equals `value`.
struct DecisionValue {
  std::string value;
};

/// Selects explicitly listed object ids.
struct IdList {
  std::vector<std::string> ids;
};

// Target sets must be non-empty; an empty selection is rejected.
ObjectSet target_set(const InformationSystem& sys, const DecisionValue& selector);
ObjectSet target_set(const InformationSystem& sys, const IdList& selector);

}  // namespace rough
