#include "fles/configuration.hpp"

#include <algorithm>
#include <stdexcept>

namespace fles {

Configuration Configuration::of(StructurePtr parent, std::vector<EventId> members) {
  const auto& s = *parent;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Bitset bits(s.size());
  for (EventId e : members) {
    if (e >= s.size()) throw std::out_of_range("unknown event id " + std::to_string(e));
    bits.set(e);
  }
  if (!bits.test(kBottom)) throw std::invalid_argument("configuration must contain bottom");
  for (EventId e : members) {
    if (!s.ancestors(e).is_subset_of(bits)) {
      throw std::invalid_argument("event set is not left-closed at " + std::to_string(e));
    }
    if (s.conflicts(e).intersects(bits)) {
      throw std::invalid_argument("event set is not conflict-free at " + std::to_string(e));
    }
  }
  return trusted(std::move(parent), bits);
}

Configuration Configuration::trusted(StructurePtr parent, const Bitset& members) {
  Configuration c;
  c.parent_ = std::move(parent);
  members.for_each([&](std::size_t e) { c.members_.push_back(static_cast<EventId>(e)); });
  c.build_order();
  return c;
}

void Configuration::build_order() {
  const auto& s = *parent_;
  const std::size_t k = members_.size();
  labels_.resize(k);
  preds_.assign(k, Bitset(k));
  succs_.assign(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) {
    labels_[i] = s.label(members_[i]);
    const Bitset& anc = s.ancestors(members_[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (anc.test(members_[j])) {
        preds_[i].set(j);
        succs_[j].set(i);
      }
    }
  }
}

bool Configuration::contains(EventId e) const { return std::binary_search(members_.begin(), members_.end(), e); }

std::size_t Configuration::index_of(EventId e) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || *it != e) {
    throw std::out_of_range("event " + std::to_string(e) + " is not in the configuration");
  }
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<std::size_t> Configuration::direct_successors(std::size_t i) const {
  Bitset cover = succs_[i];
  succs_[i].for_each([&](std::size_t j) { cover.subtract(succs_[j]); });
  return cover.indices();
}

std::size_t Configuration::concurrent_pairs() const {
  const std::size_t k = size();
  std::size_t ordered = 0;
  for (std::size_t i = 0; i < k; ++i) ordered += succs_[i].count();
  return k * (k - 1) / 2 - ordered;
}

void Configuration::add_pair(std::size_t a, std::size_t b) {
  Bitset low = preds_[a];
  low.set(a);
  Bitset high = succs_[b];
  high.set(b);
  high.for_each([&](std::size_t y) { preds_[y] |= low; });
  low.for_each([&](std::size_t x) { succs_[x] |= high; });
}

Configuration Configuration::with_order(std::size_t a, std::size_t b) const {
  Configuration c = *this;
  c.extra_order_.emplace_back(members_[a], members_[b]);
  c.add_pair(a, b);
  return c;
}

Configuration Configuration::restricted(const std::vector<std::size_t>& keep) const {
  Configuration c;
  c.parent_ = parent_;
  const std::size_t k = keep.size();
  for (std::size_t i : keep) c.members_.push_back(members_[i]);
  c.build_order();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (before(keep[a], keep[b]) && !c.before(a, b)) {
        c.extra_order_.emplace_back(c.members_[a], c.members_[b]);
        c.preds_[b].set(a);
        c.succs_[a].set(b);
      }
    }
  }
  return c;
}

}  // namespace fles
