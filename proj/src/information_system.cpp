#include "rough/information_system.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "rough/errors.hpp"

namespace rough {

namespace {

std::atomic<std::uint64_t> next_system_id{1};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

InformationSystem InformationSystem::create(
    std::vector<std::string> objects, std::vector<std::string> condition_attributes,
    std::optional<std::string> decision_attribute,
    std::vector<std::vector<std::string>> rows) {
  InformationSystem sys;
  sys.id_ = next_system_id.fetch_add(1);

  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].empty()) {
      throw InvalidInput("object id in row " + std::to_string(i + 1) + " is empty");
    }
    if (!sys.object_index_.emplace(objects[i], i).second) {
      throw InvalidInput("duplicate object id '" + objects[i] + "'");
    }
  }

  std::size_t col = 0;
  for (const auto& name : condition_attributes) {
    if (name.empty()) throw InvalidInput("attribute name is empty");
    if (!sys.column_index_.emplace(name, col++).second) {
      throw InvalidInput("duplicate attribute name '" + name + "'");
    }
  }
  if (decision_attribute) {
    if (decision_attribute->empty()) throw InvalidInput("decision attribute name is empty");
    if (!sys.column_index_.emplace(*decision_attribute, col++).second) {
      throw InvalidInput("decision attribute '" + *decision_attribute +
                         "' repeats a condition attribute");
    }
  }

  const std::size_t width = col;
  if (rows.size() != objects.size()) {
    throw InvalidInput("row count does not match object count");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw InvalidInput("ragged row for object '" + objects[i] + "': expected " +
                         std::to_string(width) + " values, got " +
                         std::to_string(rows[i].size()));
    }
    for (std::size_t j = 0; j < width; ++j) {
      if (rows[i][j].empty()) {
        throw InvalidInput("empty cell for object '" + objects[i] + "'");
      }
    }
  }

  sys.objects_ = std::move(objects);
  sys.condition_attributes_ = std::move(condition_attributes);
  sys.decision_ = std::move(decision_attribute);
  sys.cells_ = std::move(rows);
  return sys;
}

bool InformationSystem::has_object(const std::string& id) const {
  return object_index_.contains(id);
}

std::size_t InformationSystem::object_index(const std::string& id) const {
  const auto it = object_index_.find(id);
  if (it == object_index_.end()) {
    throw InvalidInput("unknown object id '" + id + "'");
  }
  return it->second;
}

bool InformationSystem::has_attribute(const std::string& name) const {
  return column_index_.contains(name);
}

const std::string& InformationSystem::value(const std::string& object_id,
                                            const std::string& attribute) const {
  return value_at(object_index(object_id), attribute);
}

const std::string& InformationSystem::value_at(std::size_t object_index,
                                               const std::string& attribute) const {
  const auto it = column_index_.find(attribute);
  if (it == column_index_.end()) {
    throw InvalidInput("unknown attribute '" + attribute + "'");
  }
  return cells_.at(object_index)[it->second];
}

InformationSystem parse_decision_table(std::istream& in, const ParseOptions& options) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    lines.push_back(split_csv_line(line));
  }
  if (lines.empty()) throw InvalidInput("table is empty");

  std::vector<std::string> header = lines.front();
  const std::size_t columns = header.size();
  std::string id_column;
  if (options.first_column_is_id) {
    if (columns < 2) throw InvalidInput("table needs an id column and at least one attribute");
    id_column = header.front();
    header.erase(header.begin());
  } else if (columns < 1) {
    throw InvalidInput("table needs at least one attribute column");
  }

  std::optional<std::string> decision;
  if (options.has_decision) {
    const std::string wanted =
        options.decision_column ? *options.decision_column : header.back();
    const auto it = std::find(header.begin(), header.end(), wanted);
    if (it == header.end()) {
      throw InvalidInput("decision column '" + wanted + "' is not in the header");
    }
    decision = wanted;
    header.erase(it);
  }
  if (header.empty()) {
    throw InvalidInput("table has no condition attributes");
  }

  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<std::string> cells = lines[r];
    if (cells.size() != columns) {
      throw InvalidInput("ragged row " + std::to_string(r) + ": expected " +
                         std::to_string(columns) + " cells, got " +
                         std::to_string(cells.size()));
    }
    std::string id;
    if (options.first_column_is_id) {
      id = cells.front();
      cells.erase(cells.begin());
    } else {
      id = std::to_string(r);
    }

    // Reorder to condition columns first, decision last.
    std::vector<std::string> row;
    row.reserve(cells.size());
    std::string decision_value;
    std::size_t cell_pos = 0;
    const std::size_t first_attr_col = options.first_column_is_id ? 1 : 0;
    for (std::size_t c = first_attr_col; c < columns; ++c) {
      const std::string& col_name = lines.front()[c];
      if (decision && col_name == *decision) {
        decision_value = cells[cell_pos++];
      } else {
        row.push_back(cells[cell_pos++]);
      }
    }
    if (decision) row.push_back(decision_value);
    objects.push_back(std::move(id));
    rows.push_back(std::move(row));
  }

  return InformationSystem::create(std::move(objects), std::move(header),
                                   std::move(decision), std::move(rows));
}

InformationSystem parse_decision_table(const std::string& text,
                                       const ParseOptions& options) {
  std::istringstream in(text);
  return parse_decision_table(in, options);
}

Partition Partition::compute(const InformationSystem& sys,
                             const std::vector<std::string>& attributes) {
  if (attributes.empty()) {
    throw InvalidInput("attribute set for a partition must be non-empty");
  }
  // Deduplicate while keeping the first occurrence; tuple equality does not
  // depend on attribute order or multiplicity.
  std::vector<std::string> attrs;
  for (const auto& a : attributes) {
    const auto& conds = sys.condition_attributes();
    if (std::find(conds.begin(), conds.end(), a) == conds.end()) {
      throw InvalidInput("unknown attribute '" + a + "'");
    }
    if (std::find(attrs.begin(), attrs.end(), a) == attrs.end()) {
      attrs.push_back(a);
    }
  }
  std::sort(attrs.begin(), attrs.end());

  Partition p;
  p.system_id_ = sys.id();
  p.universe_ = sys.objects();

  std::map<std::vector<std::string>, std::size_t> block_of_tuple;
  for (std::size_t i = 0; i < sys.object_count(); ++i) {
    std::vector<std::string> tuple;
    tuple.reserve(attrs.size());
    for (const auto& a : attrs) tuple.push_back(sys.value_at(i, a));
    const auto [it, inserted] = block_of_tuple.emplace(std::move(tuple), p.blocks_.size());
    if (inserted) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(sys.objects()[i]);
    p.block_index_.emplace(sys.objects()[i], it->second);
  }
  return p;
}

std::size_t Partition::block_index_of(const std::string& object_id) const {
  const auto it = block_index_.find(object_id);
  if (it == block_index_.end()) {
    throw InvalidInput("unknown object id '" + object_id + "'");
  }
  return it->second;
}

const std::vector<std::string>& Partition::block_of(const std::string& object_id) const {
  return blocks_[block_index_of(object_id)];
}

Partition partition(const InformationSystem& sys,
                    const std::vector<std::string>& attributes) {
  return Partition::compute(sys, attributes);
}

ObjectSet ObjectSet::create(const InformationSystem& sys,
                            const std::vector<std::string>& ids) {
  std::vector<std::pair<std::size_t, std::string>> indexed;
  indexed.reserve(ids.size());
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    const std::size_t idx = sys.object_index(id);  // throws on unknown id
    if (seen.insert(id).second) indexed.emplace_back(idx, id);
  }
  std::sort(indexed.begin(), indexed.end());

  ObjectSet set;
  set.system_id_ = sys.id();
  for (auto& [idx, id] : indexed) {
    set.lookup_.insert(id);
    set.ids_.push_back(std::move(id));
  }
  return set;
}

ObjectSet detail::ObjectSetAccess::make(std::uint64_t system_id,
                                        std::vector<std::string> ordered_ids) {
  ObjectSet set;
  set.system_id_ = system_id;
  set.lookup_.insert(ordered_ids.begin(), ordered_ids.end());
  set.ids_ = std::move(ordered_ids);
  return set;
}

ObjectSet target_set(const InformationSystem& sys, const DecisionValue& selector) {
  if (!sys.decision_attribute()) {
    throw InvalidInput("system has no decision attribute; select by ids instead");
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < sys.object_count(); ++i) {
    if (sys.value_at(i, *sys.decision_attribute()) == selector.value) {
      ids.push_back(sys.objects()[i]);
    }
  }
  if (ids.empty()) {
    throw InvalidInput("target set is empty: no object has decision value '" +
                       selector.value + "'");
  }
  return ObjectSet::create(sys, ids);
}

ObjectSet target_set(const InformationSystem& sys, const IdList& selector) {
  ObjectSet set = ObjectSet::create(sys, selector.ids);
  if (set.empty()) {
    throw InvalidInput("target set is empty");
  }
  return set;
}

}  // namespace rough
