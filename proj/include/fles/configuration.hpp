#pragma once

#include <cstddef>
#include <vector>

#include "fles/bitset.hpp"
#include "fles/event_structure.hpp"

namespace fles {

/// A left-closed, conflict-free event set containing ⊥, viewed as its own
/// conflict-free structure. Splits add ordering pairs on top of the
/// structure's causality; the effective order is the transitive closure.
///
/// Events are addressed either by their id in the parent structure or by a
/// local index (position in the sorted member list, ⊥ at index 0).
class Configuration {
 public:
  /// Throws std::invalid_argument when `members` is not a configuration.
  static Configuration of(StructurePtr parent, std::vector<EventId> members);

  /// No checks beyond sizes; `members` must be a configuration.
  static Configuration trusted(StructurePtr parent, const Bitset& members);

  const EventStructure& structure() const { return *parent_; }
  const StructurePtr& parent() const { return parent_; }

  std::size_t size() const { return members_.size(); }
  const std::vector<EventId>& members() const { return members_; }
  const std::vector<EventPair>& extra_order() const { return extra_order_; }

  bool contains(EventId e) const;
  /// Local index of a member. Throws std::out_of_range for non-members.
  std::size_t index_of(EventId e) const;

  EventId event(std::size_t i) const { return members_[i]; }
  Label label_at(std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Strict order between local indices.
  bool before(std::size_t i, std::size_t j) const { return preds_[j].test(i); }
  bool concurrent_at(std::size_t i, std::size_t j) const { return i != j && !before(i, j) && !before(j, i); }
  const Bitset& predecessors(std::size_t i) const { return preds_[i]; }
  const Bitset& successors(std::size_t i) const { return succs_[i]; }
  /// Covering successors of local index i, ascending.
  std::vector<std::size_t> direct_successors(std::size_t i) const;

  bool precedes(EventId a, EventId b) const { return before(index_of(a), index_of(b)); }
  bool concurrent(EventId a, EventId b) const { return concurrent_at(index_of(a), index_of(b)); }

  /// Number of unordered concurrent pairs.
  std::size_t concurrent_pairs() const;

  /// Copy with a < b added (local indices); the caller guarantees concurrency.
  Configuration with_order(std::size_t a, std::size_t b) const;

  /// Sub-configuration on the given local indices (ascending, including 0),
  /// keeping the closed order between them.
  Configuration restricted(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Configuration& x, const Configuration& y) {
    return x.parent_ == y.parent_ && x.members_ == y.members_ && x.preds_ == y.preds_;
  }

 private:
  Configuration() = default;
  void build_order();
  void add_pair(std::size_t a, std::size_t b);

  StructurePtr parent_;
  std::vector<EventId> members_;
  std::vector<Label> labels_;
  std::vector<EventPair> extra_order_;
  std::vector<Bitset> preds_;
  std::vector<Bitset> succs_;
};

}  // namespace fles
