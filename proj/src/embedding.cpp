#include "fles/embedding.hpp"

#include <stdexcept>
#include <unordered_map>

namespace fles {

namespace {

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

class NecessarySearch {
 public:
  NecessarySearch(const Configuration& a, const Configuration& b)
      : a_(a), b_(b), k_(a.size()), map_(k_, kUnmapped), inv_(k_, kUnmapped), mapped_(k_), compat_(k_ * k_, -1) {}

  std::optional<LocalMap> run(std::size_t* nodes) {
    if (a_.size() != b_.size() || a_.size() == 0) return std::nullopt;
    if (!same_label_counts()) return std::nullopt;
    build_label_tables();

    map_[0] = 0;
    inv_[0] = 0;
    mapped_.set(0);
    std::vector<std::size_t> frontier = a_.direct_successors(0);
    const bool found = search(std::move(frontier));
    if (nodes) *nodes += nodes_;
    if (!found) return std::nullopt;
    return map_;
  }

 private:
  bool same_label_counts() {
    std::unordered_map<uint32_t, long> diff;
    for (Label l : a_.labels()) ++diff[l.id()];
    for (Label l : b_.labels()) --diff[l.id()];
    for (auto [id, d] : diff) {
      if (d != 0) return false;
    }
    return true;
  }

  void build_label_tables() {
    std::unordered_map<uint32_t, std::size_t> dense;
    for (Label l : a_.labels()) dense.emplace(l.id(), dense.size());
    labels_ = dense.size();
    dense_a_.resize(k_);
    dense_b_.resize(k_);
    targets_.assign(labels_, {});
    for (std::size_t i = 0; i < k_; ++i) {
      dense_a_[i] = dense.at(a_.label_at(i).id());
      dense_b_[i] = dense.at(b_.label_at(i).id());
      targets_[dense_b_[i]].push_back(i);
    }
    hist_a_ = counts(a_, dense_a_, true);
    hist_b_ = counts(b_, dense_b_, true);
    after_a_ = counts(a_, dense_a_, false);
    after_b_ = counts(b_, dense_b_, false);
    total_.assign(labels_, 0);
    for (std::size_t i = 0; i < k_; ++i) ++total_[dense_a_[i]];
  }

  std::vector<std::vector<uint32_t>> counts(const Configuration& c, const std::vector<std::size_t>& dense,
                                            bool preds) const {
    std::vector<std::vector<uint32_t>> out(k_, std::vector<uint32_t>(labels_, 0));
    for (std::size_t i = 0; i < k_; ++i) {
      const Bitset& rel = preds ? c.predecessors(i) : c.successors(i);
      rel.for_each([&](std::size_t j) { ++out[i][dense[j]]; });
    }
    return out;
  }

  // Path-independent filter: the history of one side must fit among the
  // events that are not after the partner on the other side.
  bool compatible(std::size_t e, std::size_t t) {
    int8_t& memo = compat_[e * k_ + t];
    if (memo < 0) {
      bool ok = true;
      for (std::size_t x = 0; x < labels_ && ok; ++x) {
        const uint32_t own_b = dense_b_[t] == x ? 1 : 0;
        const uint32_t own_a = dense_a_[e] == x ? 1 : 0;
        ok = hist_a_[e][x] + after_b_[t][x] + own_b <= total_[x] && hist_b_[t][x] + after_a_[e][x] + own_a <= total_[x];
      }
      memo = ok ? 1 : 0;
    }
    return memo == 1;
  }

  // Any cycle in (<a ∪ <b mapped back) created by mapping e runs through e.
  bool closes_cycle(std::size_t e) const {
    Bitset seen(k_);
    std::vector<std::size_t> stack;
    auto push_succ = [&](std::size_t u) {
      a_.successors(u).for_each([&](std::size_t v) {
        if (mapped_.test(v) && !seen.test(v)) {
          seen.set(v);
          stack.push_back(v);
        }
      });
      b_.successors(map_[u]).for_each([&](std::size_t w) {
        const std::size_t v = inv_[w];
        if (v != kUnmapped && !seen.test(v)) {
          seen.set(v);
          stack.push_back(v);
        }
      });
    };
    push_succ(e);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      if (u == e) return true;
      push_succ(u);
    }
    return false;
  }

  bool search(std::vector<std::size_t> frontier) {
    ++nodes_;
    while (!frontier.empty() && mapped_.test(frontier.back())) frontier.pop_back();
    if (frontier.empty()) return mapped_.count() == k_;
    const std::size_t e = frontier.back();
    frontier.pop_back();
    for (std::size_t s : a_.direct_successors(e)) frontier.push_back(s);

    for (std::size_t t : targets_[dense_a_[e]]) {
      if (inv_[t] != kUnmapped || !compatible(e, t)) continue;
      map_[e] = t;
      inv_[t] = e;
      mapped_.set(e);
      if (!closes_cycle(e) && search(frontier)) return true;
      mapped_.reset(e);
      inv_[t] = kUnmapped;
      map_[e] = kUnmapped;
    }
    return false;
  }

  const Configuration& a_;
  const Configuration& b_;
  std::size_t k_;
  LocalMap map_;
  LocalMap inv_;
  Bitset mapped_;
  std::vector<int8_t> compat_;
  std::size_t labels_ = 0;
  std::vector<std::size_t> dense_a_, dense_b_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<std::vector<uint32_t>> hist_a_, hist_b_, after_a_, after_b_;
  std::vector<uint32_t> total_;
  std::size_t nodes_ = 0;
};

LocalMap inverse(const LocalMap& map) {
  LocalMap inv(map.size(), kUnmapped);
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = i;
  return inv;
}

}  // namespace

std::optional<LocalMap> find_necessary_map(const Configuration& source, const Configuration& target,
                                           std::size_t* nodes_visited) {
  return NecessarySearch(source, target).run(nodes_visited);
}

std::optional<Embedding> find_necessary(const Configuration& source, const Configuration& target) {
  auto map = find_necessary_map(source, target);
  if (!map) return std::nullopt;
  return Embedding{source, target, std::move(*map)};
}

std::optional<std::pair<std::size_t, std::size_t>> split_witness_local(const Configuration& source,
                                                                       const Configuration& target,
                                                                       const LocalMap& map) {
  const LocalMap inv = inverse(map);
  for (std::size_t t = 0; t < target.size(); ++t) {
    for (std::size_t u : target.direct_successors(t)) {
      if (source.concurrent_at(inv[t], inv[u])) return std::make_pair(inv[t], inv[u]);
    }
  }
  return std::nullopt;
}

bool is_necessary(const Embedding& emb) {
  const auto& a = emb.source;
  const auto& b = emb.target;
  const std::size_t k = a.size();
  if (b.size() != k || emb.map.size() != k) return false;
  std::vector<bool> hit(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t t = emb.map[i];
    if (t >= k || hit[t]) return false;
    hit[t] = true;
    if (a.label_at(i) != b.label_at(t)) return false;
  }
  const LocalMap inv = inverse(emb.map);
  // Kahn over the union of both orders on source indices.
  std::vector<Bitset> succ(k, Bitset(k));
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    succ[i] = a.successors(i);
    b.successors(emb.map[i]).for_each([&](std::size_t w) { succ[i].set(inv[w]); });
  }
  for (std::size_t i = 0; i < k; ++i) succ[i].for_each([&](std::size_t j) { ++indeg[j]; });
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < k; ++i) {
    if (indeg[i] == 0) queue.push_back(i);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    succ[queue[q]].for_each([&](std::size_t j) {
      if (--indeg[j] == 0) queue.push_back(j);
    });
  }
  return queue.size() == k;
}

bool is_sufficient(const Embedding& emb) {
  const std::size_t k = emb.source.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (emb.target.before(emb.map[i], emb.map[j]) && !emb.source.before(i, j)) return false;
    }
  }
  return true;
}

Sufficiency check_sufficient(const Embedding& emb) {
  if (!is_necessary(emb)) throw std::invalid_argument("embedding is not necessary");
  auto w = split_witness_local(emb.source, emb.target, emb.map);
  if (!w) return {};
  return {SplitWitness{emb.source.event(w->first), emb.source.event(w->second)}};
}

Configuration split(const Configuration& c, EventId e1, EventId e2) {
  const std::size_t a = c.index_of(e1);
  const std::size_t b = c.index_of(e2);
  if (!c.concurrent_at(a, b)) {
    throw std::invalid_argument("split requires concurrent events, got " + std::to_string(e1) + " and " +
                                std::to_string(e2));
  }
  return c.with_order(a, b);
}

}  // namespace fles
