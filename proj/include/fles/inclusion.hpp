#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fles/configuration.hpp"
#include "fles/event_structure.hpp"
#include "fles/label.hpp"
#include "fles/limits.hpp"

namespace fles {

struct InclusionStats {
  std::size_t embeddings_tried = 0;
  std::size_t splits = 0;
  std::size_t candidate_prunings = 0;
  std::size_t search_nodes = 0;
  std::size_t configurations_left = 0;
  std::size_t configurations_right = 0;

  InclusionStats& operator+=(const InclusionStats& o);
  friend bool operator==(const InclusionStats&, const InclusionStats&) = default;
};

struct Counterexample {
  /// ε-free, possibly refined by splits.
  Configuration configuration;
  /// Lexicographically least word of `configuration`.
  Word word;
};

struct InclusionVerdict {
  bool included = false;
  std::optional<Counterexample> counterexample;
  InclusionStats stats;
};

struct InclusionOptions {
  Limits limits{};
  /// OpenMP threads for the top-level loop; 0 keeps the runtime default.
  int threads = 0;
};

/// Decides L(e1) ⊆ L(e2). Top-level configurations of e1 are checked in
/// parallel; verdict, counterexample and stats do not depend on the schedule.
InclusionVerdict check_inclusion(const StructurePtr& e1, const StructurePtr& e2, const InclusionOptions& options = {});

/// Single-threaded reference with the same results as check_inclusion.
InclusionVerdict check_inclusion_serial(const StructurePtr& e1, const StructurePtr& e2,
                                        const InclusionOptions& options = {});

struct ConfigCheck {
  bool included = false;
  std::optional<Configuration> counterexample;
};

/// L(c1) ⊆ ∪ L(candidates) for ε-free configurations, by necessary
/// embeddings and splits.
ConfigCheck check_config(const Configuration& c1, const std::vector<Configuration>& candidates,
                         InclusionStats* stats = nullptr, const Limits& limits = {});

/// The totally ordered structure ⊥ < w[0] < w[1] < ...
StructurePtr chain(const Word& w);

struct MembershipResult {
  bool member = false;
  /// Full trace of a maximal configuration (ε events included) labeled w.
  std::optional<std::vector<EventId>> witness;
};

/// Throws std::invalid_argument when w contains ε.
MembershipResult membership(const Word& w, const StructurePtr& s, const Limits& limits = {});

}  // namespace fles
