#include "fles/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fles {

using nlohmann::json;

std::string serialize_fles(const EventStructure& s) {
  json events = json::array();
  for (EventId e = 0; e < s.size(); ++e) {
    const auto causes = s.direct_causes(e);
    events.push_back({{"id", e}, {"label", s.label(e).name()}, {"causes", std::vector<EventId>(causes.begin(), causes.end())}});
  }
  json conflicts = json::array();
  for (auto [a, b] : s.immediate_conflicts()) conflicts.push_back({a, b});
  json doc = {{"format_version", kFormatVersion}, {"events", events}, {"conflicts", conflicts}};
  return doc.dump(2) + "\n";
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

StructurePtr parse_fles(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be an object");
  if (doc.contains("format_version") && field<int>(doc, "format_version") != kFormatVersion) {
    throw ParseError("unsupported format_version");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "format_version" && key != "events" && key != "conflicts") throw ParseError("unknown field '" + key + "'");
  }
  if (!doc.contains("events")) throw ParseError("missing field 'events'");
  const json& events = doc.at("events");
  if (!events.is_array()) throw ParseError("'events' must be an array");

  std::vector<std::pair<EventId, const json*>> listed;
  for (const auto& ev : events) {
    if (!ev.is_object()) throw ParseError("event must be an object");
    listed.emplace_back(field<EventId>(ev, "id"), &ev);
  }
  std::sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const bool implicit_bottom = listed.empty() || listed.front().first != kBottom;
  RawStructure raw;
  if (implicit_bottom) {
    raw.labels.push_back(Label::epsilon());
    raw.causes.emplace_back();
  }
  for (const auto& [id, ev] : listed) {
    if (id != raw.labels.size()) throw ParseError("event ids must be dense starting at 0, got " + std::to_string(id));
    raw.labels.push_back(ev->contains("label") ? Label::intern(field<std::string>(*ev, "label")) : Label::epsilon());
    raw.causes.push_back(ev->contains("causes") ? field<std::vector<EventId>>(*ev, "causes") : std::vector<EventId>{});
  }
  if (doc.contains("conflicts")) {
    for (const auto& pair : field<std::vector<std::vector<EventId>>>(doc, "conflicts")) {
      if (pair.size() != 2) throw ParseError("conflict entries must be pairs");
      raw.add_conflict(pair[0], pair[1]);
    }
  }
  return EventStructure::create(std::move(raw));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

StructurePtr load_fles(const std::filesystem::path& path) { return parse_fles(read_file(path)); }

void save_fles(const EventStructure& s, const std::filesystem::path& path) { write_file(path, serialize_fles(s)); }

GraphDocument parse_graph(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  const bool directed = field<bool>(doc, "directed");
  const auto n = field<std::size_t>(doc, "n");
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    for (const auto& e : field<std::vector<std::vector<std::size_t>>>(doc, "edges")) {
      if (e.size() != 2) throw ParseError("edges must be pairs");
      if (e[0] >= n || e[1] >= n) throw ParseError("edge endpoint out of range");
      edges.emplace_back(e[0], e[1]);
    }
  }
  if (directed) return DiGraph{n, std::move(edges)};
  std::vector<std::size_t> marked;
  if (doc.contains("B")) marked = field<std::vector<std::size_t>>(doc, "B");
  for (std::size_t b : marked) {
    if (b >= edges.size()) throw ParseError("marked edge index out of range");
  }
  return UGraph{n, std::move(edges), std::move(marked)};
}

GraphDocument load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

std::string serialize_graph(const GraphDocument& g) {
  json doc;
  std::visit(
      [&](const auto& graph) {
        json edges = json::array();
        for (const auto& [u, v] : graph.edges) edges.push_back({u, v});
        doc["n"] = graph.n;
        doc["edges"] = edges;
        if constexpr (std::is_same_v<std::decay_t<decltype(graph)>, UGraph>) {
          doc["directed"] = false;
          doc["B"] = graph.marked;
        } else {
          doc["directed"] = true;
        }
      },
      g);
  return doc.dump() + "\n";
}

}  // namespace fles
