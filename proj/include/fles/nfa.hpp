#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fles/bitset.hpp"
#include "fles/event_structure.hpp"
#include "fles/label.hpp"
#include "fles/limits.hpp"
#include "fles/semantics.hpp"

namespace fles {

using StateId = uint32_t;

struct Transition {
  StateId from;
  Label label;
  StateId to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// ε-free automaton. States built by `encode` carry the member set of their
/// configuration; hand-built automata may leave `configurations` empty.
struct Nfa {
  std::size_t state_count = 0;
  std::vector<Bitset> configurations;
  std::vector<Label> alphabet;
  /// Sorted, duplicate-free.
  std::vector<Transition> transitions;
  StateId initial = 0;
  std::vector<StateId> accepting;

  /// States reachable from `initial`.
  std::size_t reachable_count() const;
  /// Outgoing transitions grouped by source state.
  std::vector<std::vector<Transition>> outgoing() const;
  bool is_accepting(StateId q) const;
};

/// One state per configuration containing ⊥, plus the unreachable empty
/// configuration at index 0; {⊥} is the initial state (index 1). ε moves are
/// removed by ε-closure. Throws ResourceLimitExceeded past max_nfa_states.
Nfa encode(const StructurePtr& s, const Limits& limits = {});

/// Exact language by path enumeration. Throws std::invalid_argument on a
/// cyclic automaton.
Language nfa_language(const Nfa& a, const Limits& limits = {});

struct NfaInclusion {
  bool included = false;
  /// Shortest word in L(a) \ L(b).
  std::optional<Word> witness;
  std::size_t explored = 0;
};

/// L(a) ⊆ L(b) by breadth-first search over a × subsets(b). Throws
/// ResourceLimitExceeded past max_subset_states product states.
NfaInclusion nfa_inclusion(const Nfa& a, const Nfa& b, const Limits& limits = {});

/// Plain text: `states:`, `initial:` and `accepting:` headers, then one
/// `src label dst` line per transition.
std::string export_text(const Nfa& a);

}  // namespace fles
