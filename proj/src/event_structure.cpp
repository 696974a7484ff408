#include "fles/event_structure.hpp"

#include <algorithm>
#include <sstream>

namespace fles {

RawStructure RawStructure::with_bottom() {
  RawStructure raw;
  raw.labels.push_back(Label::epsilon());
  raw.causes.emplace_back();
  return raw;
}

EventId RawStructure::add_event(Label label, std::vector<EventId> direct_causes) {
  const auto id = static_cast<EventId>(labels.size());
  labels.push_back(label);
  causes.push_back(std::move(direct_causes));
  return id;
}

void RawStructure::normalize() {
  for (std::size_t e = 0; e < causes.size(); ++e) {
    auto& c = causes[e];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (e != kBottom && c.empty()) c.push_back(kBottom);
  }
  for (auto& [a, b] : conflicts) {
    if (a > b) std::swap(a, b);
  }
  std::sort(conflicts.begin(), conflicts.end());
  conflicts.erase(std::unique(conflicts.begin(), conflicts.end()), conflicts.end());
}

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].rule << ": " << violations[i].message;
  }
  return out.str();
}

namespace {

std::string ids_to_string(const std::vector<EventId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  return out.str();
}

// Kahn's algorithm over direct causes. Returns the topological order; events
// left out lie on or behind a cycle.
std::vector<EventId> topo_sort(const RawStructure& raw, std::vector<EventId>* stuck) {
  const std::size_t n = raw.labels.size();
  std::vector<std::size_t> missing(n, 0);
  std::vector<std::vector<EventId>> succ(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (EventId c : raw.causes[e]) {
      succ[c].push_back(static_cast<EventId>(e));
      ++missing[e];
    }
  }
  std::vector<EventId> order;
  order.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (missing[e] == 0) order.push_back(static_cast<EventId>(e));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (EventId s : succ[order[i]]) {
      if (--missing[s] == 0) order.push_back(s);
    }
  }
  if (stuck) {
    for (std::size_t e = 0; e < n; ++e) {
      if (missing[e] != 0) stuck->push_back(static_cast<EventId>(e));
    }
  }
  return order;
}

struct Closure {
  std::vector<Bitset> ancestors;
  std::vector<Bitset> descendants;
  std::vector<Bitset> conflicts;
};

Closure close(const RawStructure& raw, const std::vector<EventId>& topo) {
  const std::size_t n = raw.labels.size();
  Closure c{std::vector<Bitset>(n, Bitset(n)), std::vector<Bitset>(n, Bitset(n)), std::vector<Bitset>(n, Bitset(n))};
  for (EventId e : topo) {
    for (EventId p : raw.causes[e]) {
      c.ancestors[e].set(p);
      c.ancestors[e] |= c.ancestors[p];
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    c.ancestors[e].for_each([&](std::size_t a) { c.descendants[a].set(e); });
  }
  // seed[x] = union of {b} ∪ desc(b) over immediate conflicts (x, b)
  std::vector<Bitset> seed(n, Bitset(n));
  for (auto [a, b] : raw.conflicts) {
    seed[a].set(b);
    seed[a] |= c.descendants[b];
    seed[b].set(a);
    seed[b] |= c.descendants[a];
  }
  for (EventId e : topo) {
    c.conflicts[e] = seed[e];
    for (EventId p : raw.causes[e]) c.conflicts[e] |= c.conflicts[p];
  }
  return c;
}

}  // namespace

ValidationReport validate(const RawStructure& raw) {
  ValidationReport report;
  auto add = [&](std::string rule, std::vector<EventId> events, std::string msg) {
    report.violations.push_back({std::move(rule), std::move(events), std::move(msg)});
  };

  const std::size_t n = raw.labels.size();
  if (n == 0) {
    add("bottom", {}, "structure has no events; event 0 must be the bottom event");
    return report;
  }
  if (raw.causes.size() != n) {
    add("malformed", {}, "cause lists and labels differ in length");
    return report;
  }
  if (!raw.labels[kBottom].is_epsilon()) add("bottom", {kBottom}, "bottom event must carry the empty label");
  if (!raw.causes[kBottom].empty()) add("bottom", {kBottom}, "bottom event must have no causes");

  bool structural = false;
  for (std::size_t e = 0; e < n; ++e) {
    for (EventId c : raw.causes[e]) {
      if (c >= n) {
        add("unknown-event", {static_cast<EventId>(e), c}, "cause " + std::to_string(c) + " does not exist");
        structural = true;
      }
    }
    if (e != kBottom && raw.causes[e].empty()) {
      add("bottom", {static_cast<EventId>(e)}, "event " + std::to_string(e) + " is not caused by bottom");
    }
  }
  for (auto [a, b] : raw.conflicts) {
    if (a >= n || b >= n) {
      add("unknown-event", {a, b}, "conflict references a missing event");
      structural = true;
    }
  }
  if (structural) return report;

  std::vector<EventId> stuck;
  const auto topo = topo_sort(raw, &stuck);
  if (!stuck.empty()) {
    add("causality-cycle", stuck, "causality cycle through events " + ids_to_string(stuck));
    return report;
  }

  const Closure closure = close(raw, topo);
  for (std::size_t e = 1; e < n; ++e) {
    if (!raw.causes[e].empty() && !closure.ancestors[e].test(kBottom)) {
      add("bottom", {static_cast<EventId>(e)}, "event " + std::to_string(e) + " is not above bottom");
    }
  }

  std::vector<bool> reported(n, false);
  for (auto [a, b] : raw.conflicts) {
    if (a == b) {
      add("self-conflict", {a}, "event " + std::to_string(a) + " conflicts with itself");
      reported[a] = true;
    } else if (closure.ancestors[b].test(a) || closure.ancestors[a].test(b)) {
      add("conflict-within-history", {a, b},
          "events " + std::to_string(a) + " and " + std::to_string(b) + " are causally related but in conflict");
      reported[a] = reported[b] = true;
    }
  }
  std::vector<EventId> inherited;
  for (std::size_t e = 0; e < n; ++e) {
    if (closure.conflicts[e].test(e) && !reported[e]) inherited.push_back(static_cast<EventId>(e));
  }
  if (!inherited.empty()) {
    add("inherited-self-conflict", inherited, "events in conflict with themselves after closure: " + ids_to_string(inherited));
  }
  return report;
}

StructurePtr EventStructure::create(RawStructure raw) {
  raw.normalize();
  auto report = validate(raw);
  if (!report.ok()) throw InvalidStructure(std::move(report));
  return StructurePtr(new EventStructure(std::move(raw)));
}

EventStructure::EventStructure(RawStructure raw) : raw_(std::move(raw)) {
  const std::size_t n = raw_.labels.size();
  topo_ = topo_sort(raw_, nullptr);
  Closure c = close(raw_, topo_);
  ancestors_ = std::move(c.ancestors);
  descendants_ = std::move(c.descendants);
  conflicts_ = std::move(c.conflicts);

  dsucc_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    Bitset cover = descendants_[e];
    descendants_[e].for_each([&](std::size_t d) { cover.subtract(descendants_[d]); });
    cover.for_each([&](std::size_t d) { dsucc_[e].push_back(static_cast<EventId>(d)); });
  }

  depth_.assign(n, 0);
  for (EventId e : topo_) {
    for (EventId p : raw_.causes[e]) depth_[e] = std::max(depth_[e], depth_[p] + 1);
  }
}

bool EventStructure::concurrent(EventId a, EventId b) const {
  return a != b && !precedes(a, b) && !precedes(b, a) && !in_conflict(a, b);
}

std::vector<EventId> history(const EventStructure& s, EventId e) {
  std::vector<EventId> out;
  s.ancestors(e).for_each([&](std::size_t a) { out.push_back(static_cast<EventId>(a)); });
  return out;
}

std::vector<EventId> dsucc(const EventStructure& s, EventId e) { return s.direct_successors(e); }

std::vector<EventPair> full_conflicts(const EventStructure& s) {
  std::vector<EventPair> out;
  for (EventId a = 0; a < s.size(); ++a) {
    s.conflicts(a).for_each([&](std::size_t b) {
      if (a < b) out.emplace_back(a, static_cast<EventId>(b));
    });
  }
  return out;
}

}  // namespace fles
