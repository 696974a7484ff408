#include "fles/benchgen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace fles {

StructurePtr allpar(std::size_t n) {
  if (n == 0) throw std::invalid_argument("allpar needs n >= 1");
  RawStructure raw = RawStructure::with_bottom();
  for (std::size_t i = 1; i <= n; ++i) raw.add_event(std::to_string(i), {kBottom});
  return EventStructure::create(std::move(raw));
}

StructurePtr ccnfs(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("ccnfs needs an even n >= 2");
  if (n > 40) throw std::invalid_argument("ccnfs supports n <= 40");
  RawStructure raw = RawStructure::with_bottom();
  for (std::size_t i = 1; i <= n; ++i) raw.add_event(std::to_string(i), {kBottom});
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) raw.add_conflict(static_cast<EventId>(2 * p + 1), static_cast<EventId>(2 * p + 2));
  for (uint64_t choice = 0; choice < (uint64_t{1} << pairs); ++choice) {
    std::vector<EventId> causes;
    for (std::size_t p = 0; p < pairs; ++p) causes.push_back(static_cast<EventId>(2 * p + 1 + (choice >> p & 1u)));
    raw.add_event(Label::epsilon(), std::move(causes));
  }
  return EventStructure::create(std::move(raw));
}

StructurePtr sharing(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("sharing needs n, m >= 1");
  RawStructure raw = RawStructure::with_bottom();
  std::vector<EventId> prefixes;
  for (std::size_t i = 1; i <= n; ++i) {
    EventId prev = raw.add_event("p" + std::to_string(i), {kBottom});
    prefixes.push_back(prev);
    for (std::size_t j = 1; j <= m; ++j) prev = raw.add_event("s" + std::to_string(j), {prev});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) raw.add_conflict(prefixes[a], prefixes[b]);
  }
  return EventStructure::create(std::move(raw));
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_non_bottom(const EventStructure& s, EventId e) {
  s.label(e);
  if (e == kBottom) throw std::invalid_argument("mutation cannot target bottom");
}

}  // namespace

std::string describe(const MutationKind& kind) {
  return std::visit(Overloaded{
                        [](const AddOrder& m) { return "add-order " + std::to_string(m.first) + " " + std::to_string(m.second); },
                        [](const DropEvent& m) { return "drop " + std::to_string(m.event); },
                        [](const Relabel& m) {
                          return "relabel " + std::to_string(m.event) + " " + std::string(m.label.name());
                        },
                        [](const AddConflict& m) {
                          return "add-conflict " + std::to_string(m.first) + " " + std::to_string(m.second);
                        },
                    },
                    kind);
}

StructurePtr mutate(const StructurePtr& sp, const MutationKind& kind) {
  const EventStructure& s = *sp;
  RawStructure raw = s.raw();
  std::visit(Overloaded{
                 [&](const AddOrder& m) {
                   if (!s.concurrent(m.first, m.second)) throw std::invalid_argument("add-order needs concurrent events");
                   if (!s.conflicts(m.first).is_subset_of(s.conflicts(m.second))) {
                     throw std::invalid_argument("add-order needs every conflict of the first event on the second");
                   }
                   raw.causes[m.second].push_back(m.first);
                 },
                 [&](const DropEvent& m) {
                   require_non_bottom(s, m.event);
                   Bitset gone = s.descendants(m.event);
                   gone.set(m.event);
                   std::vector<EventId> renumber(s.size(), 0);
                   RawStructure kept;
                   for (EventId e = 0; e < s.size(); ++e) {
                     if (gone.test(e)) continue;
                     renumber[e] = static_cast<EventId>(kept.labels.size());
                     kept.labels.push_back(raw.labels[e]);
                     std::vector<EventId> causes;
                     for (EventId c : raw.causes[e]) causes.push_back(renumber[c]);
                     kept.causes.push_back(std::move(causes));
                   }
                   for (auto [a, b] : raw.conflicts) {
                     if (!gone.test(a) && !gone.test(b)) kept.conflicts.emplace_back(renumber[a], renumber[b]);
                   }
                   raw = std::move(kept);
                 },
                 [&](const Relabel& m) {
                   require_non_bottom(s, m.event);
                   raw.labels[m.event] = m.label;
                 },
                 [&](const AddConflict& m) {
                   if (!s.concurrent(m.first, m.second)) throw std::invalid_argument("add-conflict needs concurrent events");
                   if (s.descendants(m.first).intersects(s.descendants(m.second))) {
                     throw std::invalid_argument("add-conflict events share a successor");
                   }
                   raw.add_conflict(m.first, m.second);
                 },
             },
             kind);
  return EventStructure::create(std::move(raw));
}

MutationKind random_mutation(const StructurePtr& sp, uint64_t seed) {
  const EventStructure& s = *sp;
  if (s.size() < 2) throw std::invalid_argument("structure has no event to mutate");
  std::mt19937_64 rng(seed);
  std::vector<AddOrder> orders;
  std::vector<AddConflict> conflicts;
  for (EventId a = 1; a < s.size(); ++a) {
    for (EventId b = 1; b < s.size(); ++b) {
      if (a == b || !s.concurrent(a, b)) continue;
      if (s.conflicts(a).is_subset_of(s.conflicts(b))) orders.push_back({a, b});
      if (a < b && !s.descendants(a).intersects(s.descendants(b))) conflicts.push_back({a, b});
    }
  }
  std::vector<Label> labels;
  for (EventId e = 1; e < s.size(); ++e) {
    if (!s.label(e).is_epsilon()) labels.push_back(s.label(e));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  labels.push_back(Label::intern("z"));

  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto any_event = [&] { return static_cast<EventId>(1 + pick(s.size() - 1)); };
  switch (pick(4)) {
    case 0:
      if (!orders.empty()) return orders[pick(orders.size())];
      [[fallthrough]];
    case 1:
      if (!conflicts.empty()) return conflicts[pick(conflicts.size())];
      [[fallthrough]];
    case 2:
      return DropEvent{any_event()};
    default:
      return Relabel{any_event(), labels[pick(labels.size())]};
  }
}

}  // namespace fles
