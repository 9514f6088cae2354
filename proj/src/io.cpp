#include "act2dp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace act2dp {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kMaxNodes = 1'000'000;

const Json& member(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_count(const Json& value, const char* what) {
  if (!value.is_number_integer() || (!value.is_number_unsigned() && value.get<std::int64_t>() < 0))
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  return value.get<std::uint64_t>();
}

std::uint32_t as_id(const Json& value, const char* what) {
  const auto x = as_count(value, what);
  if (x > std::numeric_limits<std::uint32_t>::max()) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(x);
}

Cost as_cost(const Json& value, const char* what) {
  const auto x = as_count(value, what);
  if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 4))
    throw InvalidInput(std::string(what) + " too large");
  return Cost{static_cast<std::int64_t>(x)};
}

Json parse_document(std::string_view text) {
  try {
    auto doc = Json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw InvalidInput("document must be a JSON object");
    const auto& version = member(doc, "version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != kFormatVersion)
      throw InvalidInput("unsupported format version");
    return doc;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string emit_instance(const ActivationInstance& instance) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["n_nodes"] = instance.n_nodes();
  doc["s"] = instance.s();
  doc["t"] = instance.t();
  Json edges = Json::array();
  for (const auto& e : instance.edges()) {
    edges.push_back({{"id", e.id},
                     {"u", e.u},
                     {"v", e.v},
                     {"cu", e.cost_u.value()},
                     {"cv", e.cost_v.value()},
                     {"cmid", e.mid_cost.value()}});
  }
  doc["edges"] = std::move(edges);
  if (instance.path()) doc["path"] = *instance.path();
  return doc.dump(2) + "\n";
}

ActivationInstance parse_instance(std::string_view text) {
  const Json doc = parse_document(text);
  try {
    if (auto k = doc.find("k"); k != doc.end() && (!k->is_number_integer() || k->get<std::int64_t>() != 2))
      throw InvalidInput("only k = 2 is supported");
    const auto n_nodes = as_count(member(doc, "n_nodes"), "n_nodes");
    if (n_nodes > kMaxNodes) throw InvalidInput("n_nodes exceeds " + std::to_string(kMaxNodes));
    const NodeId s = as_id(member(doc, "s"), "s");
    const NodeId t = as_id(member(doc, "t"), "t");

    std::vector<ActivationEdge> edges;
    const auto& list = member(doc, "edges");
    if (!list.is_array()) throw InvalidInput("edges must be an array");
    for (const auto& item : list) {
      if (!item.is_object()) throw InvalidInput("edge entries must be objects");
      ActivationEdge e;
      e.id = as_id(member(item, "id"), "edge id");
      e.u = as_id(member(item, "u"), "edge endpoint");
      e.v = as_id(member(item, "v"), "edge endpoint");
      e.cost_u = as_cost(member(item, "cu"), "cu");
      e.cost_v = as_cost(member(item, "cv"), "cv");
      if (auto mid = item.find("cmid"); mid != item.end()) e.mid_cost = as_cost(*mid, "cmid");
      edges.push_back(e);
    }

    std::optional<std::vector<EdgeId>> path;
    if (auto p = doc.find("path"); p != doc.end() && !p->is_null()) {
      if (!p->is_array()) throw InvalidInput("path must be an array of edge ids");
      path.emplace();
      for (const auto& id : *p) path->push_back(as_id(id, "path edge id"));
    }
    return ActivationInstance(n_nodes, s, t, std::move(edges), std::move(path));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

std::string emit_solution(const Solution& solution) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["edges"] = solution.edge_ids;
  Json levels = Json::array();
  for (Cost l : solution.levels.levels) levels.push_back(l.value());
  doc["levels"] = std::move(levels);
  doc["value"] = solution.value.value();
  doc["feasible"] = solution.feasible;
  return doc.dump(2) + "\n";
}

Solution parse_solution(std::string_view text) {
  const Json doc = parse_document(text);
  try {
    Solution sol;
    const auto& edges = member(doc, "edges");
    const auto& levels = member(doc, "levels");
    if (!edges.is_array() || !levels.is_array()) throw InvalidInput("edges and levels must be arrays");
    for (const auto& id : edges) sol.edge_ids.push_back(as_id(id, "edge id"));
    for (const auto& l : levels) sol.levels.levels.push_back(as_cost(l, "level"));
    sol.value = as_cost(member(doc, "value"), "value");
    const auto& feasible = member(doc, "feasible");
    if (!feasible.is_boolean()) throw InvalidInput("feasible must be a boolean");
    sol.feasible = feasible.get<bool>();
    return sol;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed solution: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace act2dp
