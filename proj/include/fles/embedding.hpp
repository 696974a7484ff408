#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fles/configuration.hpp"

namespace fles {

/// Label-preserving bijection between two configurations, stored over local
/// indices: `map[i]` is the target index of source index i. ⊥ maps to ⊥.
struct Embedding {
  Configuration source;
  Configuration target;
  std::vector<std::size_t> map;

  EventId image(EventId e) const { return target.event(map[source.index_of(e)]); }
};

/// Concurrent source events whose images are ordered in the target.
struct SplitWitness {
  EventId first;
  EventId second;

  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

struct Sufficiency {
  std::optional<SplitWitness> witness;
  bool sufficient() const { return !witness.has_value(); }
};

/// Mapping found by the necessary-embedding search, local indices only.
using LocalMap = std::vector<std::size_t>;

/// Necessary-embedding search over ε-free configurations.
///
/// Depth-first over the source order with a frontier stack seeded by ⊥'s
/// successors; targets are tried in ascending index order, so the result is
/// deterministic. Returns nullopt when no necessary embedding exists.
std::optional<LocalMap> find_necessary_map(const Configuration& source, const Configuration& target,
                                           std::size_t* nodes_visited = nullptr);

std::optional<Embedding> find_necessary(const Configuration& source, const Configuration& target);

/// First (target index, covering successor) pair in ascending order whose
/// preimages are concurrent in the source. nullopt means sufficient.
std::optional<std::pair<std::size_t, std::size_t>> split_witness_local(const Configuration& source,
                                                                       const Configuration& target,
                                                                       const LocalMap& map);

/// Bijective, label-preserving and (<source ∪ <target mapped back)+ acyclic.
bool is_necessary(const Embedding& emb);

/// φ(e) < φ(e') in the target implies e < e' in the source, for all pairs.
bool is_sufficient(const Embedding& emb);

/// Throws std::invalid_argument when `emb` is not necessary.
Sufficiency check_sufficient(const Embedding& emb);

/// The configuration with e1 < e2 added. Throws std::invalid_argument
/// unless e1 and e2 are concurrent in `c`.
Configuration split(const Configuration& c, EventId e1, EventId e2);

}  // namespace fles
