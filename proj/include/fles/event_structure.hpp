#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fles/bitset.hpp"
#include "fles/label.hpp"

namespace fles {

using EventId = uint32_t;
inline constexpr EventId kBottom = 0;

using EventPair = std::pair<EventId, EventId>;

/// Unvalidated event structure data: labels, direct causes and immediate
/// conflicts, all indexed by event id. Event 0 is ⊥.
struct RawStructure {
  std::vector<Label> labels;
  std::vector<std::vector<EventId>> causes;
  std::vector<EventPair> conflicts;

  /// A structure holding only ⊥.
  static RawStructure with_bottom();

  EventId add_event(Label label, std::vector<EventId> direct_causes = {});
  EventId add_event(std::string_view label, std::vector<EventId> direct_causes = {}) {
    return add_event(Label::intern(label), std::move(direct_causes));
  }
  void add_conflict(EventId a, EventId b) { conflicts.emplace_back(a, b); }

  std::size_t size() const { return labels.size(); }

  /// Sorts and deduplicates causes and conflicts, orients conflict pairs
  /// (low, high), and gives every non-⊥ event without causes ⊥ as a cause.
  void normalize();

  friend bool operator==(const RawStructure&, const RawStructure&) = default;
};

struct Violation {
  std::string rule;
  std::vector<EventId> events;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view rule) const;
  std::string summary() const;
};

/// Reports every violated axiom of a finite labeled prime event structure.
ValidationReport validate(const RawStructure& raw);

class InvalidStructure : public std::invalid_argument {
 public:
  explicit InvalidStructure(ValidationReport report)
      : std::invalid_argument("invalid event structure: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class EventStructure;
using StructurePtr = std::shared_ptr<const EventStructure>;

/// Validated, immutable labeled prime event structure.
///
/// Causality is kept as direct-cause edges; the strict order and the closed
/// conflict relation are precomputed as per-event bitsets.
class EventStructure {
 public:
  /// Normalizes, validates and freezes. Throws InvalidStructure.
  static StructurePtr create(RawStructure raw);

  std::size_t size() const { return raw_.labels.size(); }
  const RawStructure& raw() const { return raw_; }

  Label label(EventId e) const { return raw_.labels[check(e)]; }
  std::span<const EventId> direct_causes(EventId e) const { return raw_.causes[check(e)]; }
  const std::vector<EventPair>& immediate_conflicts() const { return raw_.conflicts; }

  /// a < b
  bool precedes(EventId a, EventId b) const { return ancestors_[check(b)].test(check(a)); }
  bool in_conflict(EventId a, EventId b) const { return conflicts_[check(a)].test(check(b)); }
  bool concurrent(EventId a, EventId b) const;

  const Bitset& ancestors(EventId e) const { return ancestors_[check(e)]; }
  const Bitset& descendants(EventId e) const { return descendants_[check(e)]; }
  const Bitset& conflicts(EventId e) const { return conflicts_[check(e)]; }
  const std::vector<EventId>& direct_successors(EventId e) const { return dsucc_[check(e)]; }

  /// Causal depth: 0 for ⊥, otherwise 1 + the maximum over direct causes.
  uint32_t depth(EventId e) const { return depth_[check(e)]; }

  /// Event ids ordered so that causes precede their effects.
  const std::vector<EventId>& topological_order() const { return topo_; }

 private:
  explicit EventStructure(RawStructure raw);
  EventId check(EventId e) const {
    if (e >= raw_.labels.size()) throw std::out_of_range("unknown event id " + std::to_string(e));
    return e;
  }

  RawStructure raw_;
  std::vector<Bitset> ancestors_;
  std::vector<Bitset> descendants_;
  std::vector<Bitset> conflicts_;
  std::vector<std::vector<EventId>> dsucc_;
  std::vector<uint32_t> depth_;
  std::vector<EventId> topo_;
};

/// ⌈e⌉ = { e' | e' < e }, ascending.
std::vector<EventId> history(const EventStructure& s, EventId e);

/// Covering successors of e, ascending.
std::vector<EventId> dsucc(const EventStructure& s, EventId e);

/// The conflict relation closed under causality, as ordered pairs (a < b by id).
std::vector<EventPair> full_conflicts(const EventStructure& s);

inline bool concurrent(const EventStructure& s, EventId a, EventId b) { return s.concurrent(a, b); }

}  // namespace fles
