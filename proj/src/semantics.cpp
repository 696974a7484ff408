#include "fles/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fles {

// ---------------------------------------------------------------------------
// Language

Language::Language(std::vector<Word> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Language::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

bool Language::includes(const Language& sub) const {
  return std::includes(words_.begin(), words_.end(), sub.words_.begin(), sub.words_.end());
}

Language& Language::operator|=(const Language& other) {
  std::vector<Word> merged;
  merged.reserve(words_.size() + other.words_.size());
  std::set_union(words_.begin(), words_.end(), other.words_.begin(), other.words_.end(), std::back_inserter(merged));
  words_ = std::move(merged);
  return *this;
}

Language operator&(const Language& a, const Language& b) {
  std::vector<Word> out;
  std::set_intersection(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(), std::back_inserter(out));
  Language l;
  l.words_ = std::move(out);
  return l;
}

Language operator-(const Language& a, const Language& b) {
  std::vector<Word> out;
  std::set_difference(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(), std::back_inserter(out));
  Language l;
  l.words_ = std::move(out);
  return l;
}

LabelSignature signature(const Configuration& c) {
  std::map<Label, uint32_t> counts;
  for (Label l : c.labels()) {
    if (!l.is_epsilon()) ++counts[l];
  }
  return {counts.begin(), counts.end()};
}

// ---------------------------------------------------------------------------
// Configurations

bool is_configuration(const EventStructure& s, const std::vector<EventId>& members) {
  Bitset bits(s.size());
  for (EventId e : members) {
    if (e >= s.size()) throw std::out_of_range("unknown event id " + std::to_string(e));
    bits.set(e);
  }
  if (!bits.test(kBottom)) return false;
  for (EventId e : members) {
    if (!s.ancestors(e).is_subset_of(bits)) return false;
    if (s.conflicts(e).intersects(bits)) return false;
  }
  return true;
}

namespace {

/// Include/exclude search over enabled events. Each maximal configuration is
/// reached by exactly one path: a branch that excludes an enabled event is
/// kept only while some event that could block it by conflict is still live.
class MaximalEnumerator {
 public:
  MaximalEnumerator(const EventStructure& s, const Limits& limits,
                    const std::optional<std::vector<LabelSignature>>& wanted)
      : s_(s),
        limits_(limits),
        effects_(s.size()),
        missing_(s.size(), 0),
        in_(s.size()),
        out_(s.size()),
        conf_(s.size()),
        ready_(s.size()),
        scratch_(s.size()) {
    for (EventId e = 0; e < s.size(); ++e) {
      for (EventId c : s.direct_causes(e)) {
        effects_[c].push_back(e);
        ++missing_[e];
      }
    }
    if (wanted) setup_signatures(*wanted);
  }

  template <typename Emit>
  void run(Emit&& emit) {
    include(kBottom);
    recurse(emit);
  }

  std::size_t found() const { return found_; }

 private:
  void setup_signatures(const std::vector<LabelSignature>& wanted) {
    filtering_ = true;
    std::map<Label, std::size_t> dense;
    for (EventId e = 0; e < s_.size(); ++e) {
      const Label l = s_.label(e);
      if (l.is_epsilon()) continue;
      auto [it, fresh] = dense.emplace(l, masks_.size());
      if (fresh) masks_.emplace_back(s_.size());
      masks_[it->second].set(e);
    }
    for (const auto& sig : wanted) {
      std::vector<uint32_t> counts(masks_.size(), 0);
      bool possible = true;
      for (auto [label, n] : sig) {
        auto it = dense.find(label);
        if (it == dense.end()) {
          if (n > 0) possible = false;
          continue;
        }
        counts[it->second] = n;
      }
      if (possible) wanted_.push_back(std::move(counts));
    }
    std::sort(wanted_.begin(), wanted_.end());
    wanted_.erase(std::unique(wanted_.begin(), wanted_.end()), wanted_.end());
    lower_.resize(masks_.size());
    upper_.resize(masks_.size());
  }

  bool signature_feasible() {
    if (!filtering_) return true;
    scratch_.set_all();
    scratch_.subtract(in_);
    scratch_.subtract(out_);
    scratch_.subtract(conf_);
    for (std::size_t x = 0; x < masks_.size(); ++x) {
      lower_[x] = static_cast<uint32_t>(in_.count_and(masks_[x]));
      upper_[x] = lower_[x] + static_cast<uint32_t>(scratch_.count_and(masks_[x]));
    }
    for (const auto& want : wanted_) {
      bool ok = true;
      for (std::size_t x = 0; x < want.size() && ok; ++x) ok = lower_[x] <= want[x] && want[x] <= upper_[x];
      if (ok) return true;
    }
    return false;
  }

  bool signature_matches() {
    if (!filtering_) return true;
    for (std::size_t x = 0; x < masks_.size(); ++x) lower_[x] = static_cast<uint32_t>(in_.count_and(masks_[x]));
    return std::binary_search(wanted_.begin(), wanted_.end(), lower_);
  }

  // Some conflicting event that could still enter the configuration.
  bool has_live_blocker(EventId e) const { return s_.conflicts(e).find_first_excluding({&out_, &conf_}) != Bitset::npos; }

  bool excluded_events_blockable() const {
    bool ok = true;
    out_.for_each([&](std::size_t d) {
      if (ok && ready_.test(d) && !conf_.test(d) && !has_live_blocker(static_cast<EventId>(d))) ok = false;
    });
    return ok;
  }

  void include(EventId e) {
    in_.set(e);
    conf_ |= s_.conflicts(e);
    for (EventId x : effects_[e]) {
      if (--missing_[x] == 0) ready_.set(x);
    }
  }

  void undo(EventId e, Bitset saved_conf) {
    for (EventId x : effects_[e]) {
      if (missing_[x]++ == 0) ready_.reset(x);
    }
    conf_ = std::move(saved_conf);
    in_.reset(e);
  }

  template <typename Emit>
  void recurse(Emit& emit) {
    if (!signature_feasible()) return;
    if (!excluded_events_blockable()) return;
    const std::size_t next = ready_.find_first_excluding({&in_, &out_, &conf_});
    if (next == Bitset::npos) {
      bool maximal = true;
      out_.for_each([&](std::size_t d) {
        if (ready_.test(d) && !conf_.test(d)) maximal = false;
      });
      if (!maximal) return;
      if (++found_ > limits_.max_configurations) {
        throw ResourceLimitExceeded("maximal configurations", limits_.max_configurations);
      }
      if (signature_matches()) emit(in_);
      return;
    }
    const auto e = static_cast<EventId>(next);
    Bitset saved = conf_;
    include(e);
    recurse(emit);
    undo(e, std::move(saved));
    if (has_live_blocker(e)) {
      out_.set(e);
      recurse(emit);
      out_.reset(e);
    }
  }

  const EventStructure& s_;
  const Limits& limits_;
  std::vector<std::vector<EventId>> effects_;
  std::vector<uint32_t> missing_;
  Bitset in_;
  Bitset out_;
  Bitset conf_;
  Bitset ready_;
  Bitset scratch_;
  std::size_t found_ = 0;

  bool filtering_ = false;
  std::vector<Bitset> masks_;
  std::vector<std::vector<uint32_t>> wanted_;
  std::vector<uint32_t> lower_;
  std::vector<uint32_t> upper_;
};

}  // namespace

std::vector<Configuration> maximal_configurations(const StructurePtr& s, const EnumerationOptions& options) {
  std::vector<Bitset> found;
  MaximalEnumerator en(*s, options.limits, options.wanted_signatures);
  en.run([&](const Bitset& c) { found.push_back(c); });
  if (options.visited) *options.visited = en.found();

  std::vector<Configuration> out;
  out.reserve(found.size());
  for (const auto& bits : found) {
    auto c = Configuration::trusted(s, bits);
    out.push_back(options.epsilon_free ? epsilon_free(c) : std::move(c));
  }
  // Lexicographic by the sorted member ids of the full configuration.
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> keys(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keys[i] = found[i].indices();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<Configuration> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::size_t count_maximal_configurations(const StructurePtr& s, const Limits& limits) {
  MaximalEnumerator en(*s, limits, std::nullopt);
  en.run([](const Bitset&) {});
  return en.found();
}

// ---------------------------------------------------------------------------
// Traces and languages

namespace {

struct TraceWalker {
  const Configuration& c;
  const std::function<bool(const std::vector<EventId>&)>& visit;
  Bitset placed;
  std::vector<EventId> seq;
  std::size_t visited = 0;
  bool stop = false;

  void walk() {
    if (seq.size() == c.size()) {
      ++visited;
      if (!visit(seq)) stop = true;
      return;
    }
    for (std::size_t i = 0; i < c.size() && !stop; ++i) {
      if (placed.test(i) || !c.predecessors(i).is_subset_of(placed)) continue;
      placed.set(i);
      seq.push_back(c.event(i));
      walk();
      seq.pop_back();
      placed.reset(i);
    }
  }
};

}  // namespace

std::size_t for_each_trace(const Configuration& c, const std::function<bool(const std::vector<EventId>&)>& visit) {
  TraceWalker w{c, visit, Bitset(c.size()), {}, 0, false};
  w.seq.reserve(c.size());
  w.walk();
  return w.visited;
}

std::vector<std::vector<EventId>> traces(const Configuration& c, const Limits& limits) {
  std::vector<std::vector<EventId>> out;
  for_each_trace(c, [&](const std::vector<EventId>& t) {
    if (out.size() >= limits.max_traces) throw ResourceLimitExceeded("traces", limits.max_traces);
    out.push_back(t);
    return true;
  });
  return out;
}

bool is_trace(const EventStructure& s, const std::vector<EventId>& seq) {
  Bitset placed(s.size());
  for (EventId e : seq) {
    if (e >= s.size()) throw std::out_of_range("unknown event id " + std::to_string(e));
    if (placed.test(e)) return false;
    if (!s.ancestors(e).is_subset_of(placed)) return false;
    placed.set(e);
  }
  if (!placed.test(kBottom)) return false;
  for (EventId e : seq) {
    if (s.conflicts(e).intersects(placed)) return false;
  }
  for (EventId e = 0; e < s.size(); ++e) {
    if (placed.test(e)) continue;
    if (s.ancestors(e).is_subset_of(placed) && !s.conflicts(e).intersects(placed)) return false;
  }
  return true;
}

Word word_of(const EventStructure& s, const std::vector<EventId>& trace) {
  Word w;
  for (EventId e : trace) {
    if (!s.label(e).is_epsilon()) w.push_back(s.label(e));
  }
  return w;
}

Language language(const Configuration& c, const Limits& limits) {
  std::vector<Word> words;
  std::size_t seen = 0;
  auto compact = [&] {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() > limits.max_words) throw ResourceLimitExceeded("words", limits.max_words);
  };
  for_each_trace(c, [&](const std::vector<EventId>& t) {
    if (++seen > limits.max_traces) throw ResourceLimitExceeded("traces", limits.max_traces);
    words.push_back(word_of(c.structure(), t));
    if (words.size() > 2 * limits.max_words) compact();
    return true;
  });
  compact();
  return Language(std::move(words));
}

Language language(const StructurePtr& s, const Limits& limits) {
  Language out;
  for (const auto& c : maximal_configurations(s, {limits, false, std::nullopt, nullptr})) {
    out |= language(c, limits);
    if (out.size() > limits.max_words) throw ResourceLimitExceeded("words", limits.max_words);
  }
  return out;
}

Configuration epsilon_free(const Configuration& c) {
  std::vector<std::size_t> keep;
  keep.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == 0 || !c.label_at(i).is_epsilon()) keep.push_back(i);
  }
  if (keep.size() == c.size()) return c;
  return c.restricted(keep);
}

std::vector<EventId> dsucc(const Configuration& c, EventId e) {
  std::vector<EventId> out;
  for (std::size_t j : c.direct_successors(c.index_of(e))) out.push_back(c.event(j));
  return out;
}

double pc_metric(const StructurePtr& s, const Limits& limits) {
  const auto configs = maximal_configurations(s, {limits, false, std::nullopt, nullptr});
  double total = 0.0;
  for (const auto& c : configs) {
    uint32_t depth = 0;
    for (EventId e : c.members()) depth = std::max(depth, s->depth(e));
    if (depth > 0) total += static_cast<double>(c.size() - 1) / depth;
  }
  return configs.empty() ? 0.0 : total / static_cast<double>(configs.size());
}

Word least_word(const Configuration& config) {
  const Configuration c = epsilon_free(config);
  const std::size_t k = c.size();
  Word out;
  Bitset start(k);
  start.set(0);
  std::set<Bitset> frontier{start};
  for (std::size_t step = 1; step < k; ++step) {
    const std::string* best = nullptr;
    Label best_label;
    for (const auto& placed : frontier) {
      for (std::size_t i = 1; i < k; ++i) {
        if (placed.test(i) || !c.predecessors(i).is_subset_of(placed)) continue;
        const std::string& name = c.label_at(i).name();
        if (!best || name < *best) {
          best = &name;
          best_label = c.label_at(i);
        }
      }
    }
    std::set<Bitset> next;
    for (const auto& placed : frontier) {
      for (std::size_t i = 1; i < k; ++i) {
        if (placed.test(i) || c.label_at(i) != best_label || !c.predecessors(i).is_subset_of(placed)) continue;
        Bitset grown = placed;
        grown.set(i);
        next.insert(std::move(grown));
      }
    }
    out.push_back(best_label);
    frontier = std::move(next);
  }
  return out;
}

}  // namespace fles
