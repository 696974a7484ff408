#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "fles/event_structure.hpp"
#include "fles/label.hpp"

namespace fles {

/// ⊥ and n concurrent events labeled "1".."n".
StructurePtr allpar(std::size_t n);

/// n uniquely labeled events with (1,2), (3,4), ... in conflict, and one
/// ε reset event per choice of one event from each pair. Requires even n ≥ 2.
StructurePtr ccnfs(std::size_t n);

/// n mutually conflicting prefixes p1..pn, each with its own chain s1..sm.
StructurePtr sharing(std::size_t n, std::size_t m);

struct AddOrder {
  EventId first;
  EventId second;
};
struct DropEvent {
  EventId event;
};
struct Relabel {
  EventId event;
  Label label;
};
struct AddConflict {
  EventId first;
  EventId second;
};

using MutationKind = std::variant<AddOrder, DropEvent, Relabel, AddConflict>;

std::string describe(const MutationKind& kind);

/// Throws std::invalid_argument when the mutation does not apply:
/// AddOrder needs concurrent events where every conflict of the first is
/// already a conflict of the second; AddConflict needs concurrent events
/// without a common successor;
/// DropEvent and Relabel reject ⊥. Unknown ids throw std::out_of_range.
StructurePtr mutate(const StructurePtr& s, const MutationKind& kind);

/// An applicable mutation chosen deterministically from `seed`. Throws
/// std::invalid_argument when the structure has no event besides ⊥.
MutationKind random_mutation(const StructurePtr& s, uint64_t seed);

}  // namespace fles
