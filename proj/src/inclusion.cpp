#include "fles/inclusion.hpp"

#include <omp.h>

#include <exception>
#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>

#include "fles/embedding.hpp"
#include "fles/semantics.hpp"

namespace fles {

InclusionStats& InclusionStats::operator+=(const InclusionStats& o) {
  embeddings_tried += o.embeddings_tried;
  splits += o.splits;
  candidate_prunings += o.candidate_prunings;
  search_nodes += o.search_nodes;
  configurations_left += o.configurations_left;
  configurations_right += o.configurations_right;
  return *this;
}

namespace {

/// Embedding search with splitting, for one top-level configuration.
class Checker {
 public:
  Checker(const std::vector<Configuration>& pool, const Limits& limits, std::size_t depth_bound)
      : pool_(pool), limits_(limits), depth_bound_(depth_bound) {}

  bool check(const Configuration& c1, std::span<const std::size_t> cands, std::size_t depth) {
    for (std::size_t i = 0; i < cands.size(); ++i) {
      ++stats.embeddings_tried;
      auto phi = find_necessary_map(c1, pool_[cands[i]], &stats.search_nodes);
      if (phi) return suff_or_split(c1, cands[i], *phi, cands.subspan(i), depth);
      ++stats.candidate_prunings;
    }
    counterexample = c1;
    return false;
  }

  InclusionStats stats;
  std::optional<Configuration> counterexample;

 private:
  bool suff_or_split(const Configuration& c1, std::size_t target, const LocalMap& phi,
                     std::span<const std::size_t> cands, std::size_t depth) {
    const auto w = split_witness_local(c1, pool_[target], phi);
    if (!w) return true;
    if (depth + 1 > depth_bound_) throw std::logic_error("split depth exceeds the number of concurrent pairs");
    if (++stats.splits > limits_.max_splits) throw ResourceLimitExceeded("splits", limits_.max_splits);
    if (!suff_or_split(c1.with_order(w->first, w->second), target, phi, cands, depth + 1)) return false;
    return check(c1.with_order(w->second, w->first), cands, depth + 1);
  }

  const std::vector<Configuration>& pool_;
  const Limits& limits_;
  std::size_t depth_bound_;
};

std::size_t pair_bound(const Configuration& c) { return c.size() * (c.size() - 1) / 2; }

struct Prepared {
  std::vector<Configuration> left;
  std::vector<Configuration> pool;
  std::map<LabelSignature, std::vector<std::size_t>> groups;
  std::size_t right_visited = 0;
};

Prepared prepare(const StructurePtr& e1, const StructurePtr& e2, const Limits& limits) {
  Prepared p;
  p.left = maximal_configurations(e1, {limits, true, std::nullopt, nullptr});
  std::vector<LabelSignature> sigs;
  for (const auto& c : p.left) sigs.push_back(signature(c));
  std::sort(sigs.begin(), sigs.end());
  sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
  p.pool = maximal_configurations(e2, {limits, true, sigs, &p.right_visited});
  for (std::size_t j = 0; j < p.pool.size(); ++j) p.groups[signature(p.pool[j])].push_back(j);
  return p;
}

struct TopResult {
  bool included = true;
  std::optional<Configuration> counterexample;
  InclusionStats stats;
};

TopResult check_top(const Prepared& p, std::size_t i, const Limits& limits) {
  static const std::vector<std::size_t> kNone;
  const Configuration& c1 = p.left[i];
  auto it = p.groups.find(signature(c1));
  const std::vector<std::size_t>& cands = it == p.groups.end() ? kNone : it->second;
  Checker checker(p.pool, limits, pair_bound(c1));
  TopResult r;
  r.included = checker.check(c1, cands, 0);
  r.counterexample = std::move(checker.counterexample);
  r.stats = checker.stats;
  r.stats.candidate_prunings += p.right_visited - cands.size();
  return r;
}

InclusionVerdict assemble(const Prepared& p, std::vector<TopResult>& results) {
  InclusionVerdict v;
  v.included = true;
  v.stats.configurations_left = p.left.size();
  v.stats.configurations_right = p.right_visited;
  for (auto& r : results) {
    v.stats += r.stats;
    if (!r.included && v.included) {
      v.included = false;
      Word w = least_word(*r.counterexample);
      v.counterexample = Counterexample{std::move(*r.counterexample), std::move(w)};
    }
  }
  return v;
}

}  // namespace

ConfigCheck check_config(const Configuration& c1, const std::vector<Configuration>& candidates, InclusionStats* stats,
                         const Limits& limits) {
  std::vector<std::size_t> all(candidates.size());
  std::iota(all.begin(), all.end(), 0);
  Checker checker(candidates, limits, pair_bound(c1));
  ConfigCheck out;
  out.included = checker.check(c1, all, 0);
  out.counterexample = std::move(checker.counterexample);
  if (stats) *stats += checker.stats;
  return out;
}

InclusionVerdict check_inclusion_serial(const StructurePtr& e1, const StructurePtr& e2,
                                        const InclusionOptions& options) {
  const Prepared p = prepare(e1, e2, options.limits);
  std::vector<TopResult> results;
  results.reserve(p.left.size());
  for (std::size_t i = 0; i < p.left.size(); ++i) results.push_back(check_top(p, i, options.limits));
  return assemble(p, results);
}

InclusionVerdict check_inclusion(const StructurePtr& e1, const StructurePtr& e2, const InclusionOptions& options) {
  const Prepared p = prepare(e1, e2, options.limits);
  const auto n = static_cast<std::ptrdiff_t>(p.left.size());
  std::vector<TopResult> results(p.left.size());
  std::vector<std::exception_ptr> errors(p.left.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = check_top(p, static_cast<std::size_t>(i), options.limits);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return assemble(p, results);
}

StructurePtr chain(const Word& w) {
  RawStructure raw = RawStructure::with_bottom();
  EventId prev = kBottom;
  for (Label l : w) {
    if (l.is_epsilon()) throw std::invalid_argument("word contains epsilon");
    prev = raw.add_event(l, {prev});
  }
  return EventStructure::create(std::move(raw));
}

MembershipResult membership(const Word& w, const StructurePtr& s, const Limits& limits) {
  const StructurePtr line = chain(w);
  Bitset all(line->size());
  all.set_all();
  const Configuration source = Configuration::trusted(line, all);
  const std::vector<LabelSignature> wanted{signature(source)};

  for (const auto& full : maximal_configurations(s, {limits, false, wanted, nullptr})) {
    const Configuration target = epsilon_free(full);
    auto phi = find_necessary_map(source, target);
    if (!phi) continue;

    // Place each image in word order, pulling in its ε history first.
    const EventStructure& es = *s;
    Bitset members(es.size());
    for (EventId e : full.members()) members.set(e);
    Bitset placed(es.size());
    std::vector<EventId> trace;
    auto place_history = [&](EventId e) {
      for (EventId x : es.topological_order()) {
        if (members.test(x) && !placed.test(x) && es.ancestors(e).test(x)) {
          placed.set(x);
          trace.push_back(x);
        }
      }
      if (!placed.test(e)) {
        placed.set(e);
        trace.push_back(e);
      }
    };
    place_history(kBottom);
    for (std::size_t i = 1; i < source.size(); ++i) place_history(target.event((*phi)[i]));
    for (EventId x : es.topological_order()) {
      if (members.test(x) && !placed.test(x)) {
        placed.set(x);
        trace.push_back(x);
      }
    }
    return {true, std::move(trace)};
  }
  return {false, std::nullopt};
}

}  // namespace fles
