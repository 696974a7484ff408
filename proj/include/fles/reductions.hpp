#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fles/event_structure.hpp"

namespace fles {

using Edge = std::pair<std::size_t, std::size_t>;

/// Directed graph on vertices 0..n-1.
struct DiGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  bool has_self_loop() const;
  /// Copy without self-loops.
  DiGraph without_self_loops() const;
};

/// Undirected graph with a marked edge subset B (indices into `edges`).
struct UGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> marked;

  bool has_self_loop() const;
  UGraph without_self_loops() const;
  std::size_t half_marked() const { return marked.size() / 2; }
  /// Each edge {u,v} as u→v followed by v→u.
  DiGraph bidirected() const;
};

/// Event structure whose language contains x^n iff g has a Hamiltonian
/// cycle. Throws std::invalid_argument on self-loops or n ≤ 1.
StructurePtr hc_structure(const DiGraph& g);

struct DhcPair {
  StructurePtr left;
  StructurePtr right;
};

/// Structures with L(left) ⊆ L(right) iff g_D is Hamiltonian for every
/// D ⊆ B with |D| ≤ ⌊|B|/2⌋. Throws std::invalid_argument on self-loops,
/// n ≤ 1 or bad marked indices.
DhcPair dhc_pair(const UGraph& g);

/// Permutation search. Throws std::invalid_argument for n > 9 or n = 0.
bool brute_hc(const DiGraph& g);

/// Throws std::invalid_argument for n > 8 or |B| > 8.
bool brute_dhc(const UGraph& g);

}  // namespace fles
