#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fles/configuration.hpp"
#include "fles/event_structure.hpp"
#include "fles/label.hpp"
#include "fles/limits.hpp"

namespace fles {

/// Finite set of words, kept sorted and deduplicated.
class Language {
 public:
  Language() = default;
  explicit Language(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const;
  bool includes(const Language& sub) const;

  Language& operator|=(const Language& other);
  friend Language operator|(Language a, const Language& b) { return a |= b; }
  friend Language operator&(const Language& a, const Language& b);
  friend Language operator-(const Language& a, const Language& b);
  friend bool operator==(const Language&, const Language&) = default;

 private:
  std::vector<Word> words_;
};

/// Multiset of non-ε labels, sorted by label id.
using LabelSignature = std::vector<std::pair<Label, uint32_t>>;
LabelSignature signature(const Configuration& c);

/// Left-closed, conflict-free and containing ⊥.
bool is_configuration(const EventStructure& s, const std::vector<EventId>& members);

struct EnumerationOptions {
  Limits limits{};
  /// Replace each result by its ε-free normalization.
  bool epsilon_free = false;
  /// When set, only configurations whose ε-free label signature is listed
  /// are returned; branches that cannot reach one are pruned.
  std::optional<std::vector<LabelSignature>> wanted_signatures;
  /// Receives the number of maximal configurations visited, filtered or not.
  std::size_t* visited = nullptr;
};

/// All ⊆-maximal configurations, ordered lexicographically by member ids.
/// Throws ResourceLimitExceeded past limits.max_configurations.
std::vector<Configuration> maximal_configurations(const StructurePtr& s, const EnumerationOptions& options = {});

/// Number of maximal configurations, without materializing them.
std::size_t count_maximal_configurations(const StructurePtr& s, const Limits& limits = {});

/// Streams every linearization of the configuration order (⊥ first).
/// The visitor returns false to stop. Returns the number of traces visited.
std::size_t for_each_trace(const Configuration& c, const std::function<bool(const std::vector<EventId>&)>& visit);

/// All traces, materialized. Throws past limits.max_traces.
std::vector<std::vector<EventId>> traces(const Configuration& c, const Limits& limits = {});

/// Polynomial check that `seq` is a trace of a maximal configuration of `s`.
bool is_trace(const EventStructure& s, const std::vector<EventId>& seq);

/// Labels of a trace with ε dropped.
Word word_of(const EventStructure& s, const std::vector<EventId>& trace);

Language language(const Configuration& c, const Limits& limits = {});
Language language(const StructurePtr& s, const Limits& limits = {});

/// Removes every ε-labeled event except ⊥, keeping the closed order.
Configuration epsilon_free(const Configuration& c);

/// Covering successors of `e` in the configuration order, as event ids.
std::vector<EventId> dsucc(const Configuration& c, EventId e);

/// Average over maximal configurations of |C \ {⊥}| / max causal depth in C.
/// Returns 0 when the only configuration is {⊥}.
double pc_metric(const StructurePtr& s, const Limits& limits = {});

/// Lexicographically least word (by label name) of the configuration.
Word least_word(const Configuration& c);

}  // namespace fles
