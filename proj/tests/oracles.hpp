#pragma once
// Independent brute-force references used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fles/event_structure.hpp"
#include "fles/label.hpp"

namespace oracle {

using fles::EventId;
using fles::Label;
using fles::StructurePtr;
using fles::Word;

/// Naive closures computed straight from the definitions.
struct Closed {
  std::size_t n = 0;
  std::vector<std::vector<bool>> before;  // before[a][b]: a < b
  std::vector<std::vector<bool>> conflict;
};

inline Closed close(const fles::RawStructure& raw) {
  Closed c;
  c.n = raw.labels.size();
  c.before.assign(c.n, std::vector<bool>(c.n, false));
  c.conflict.assign(c.n, std::vector<bool>(c.n, false));
  for (EventId e = 0; e < c.n; ++e) {
    for (EventId d : raw.causes[e]) c.before[d][e] = true;
    if (e != 0) c.before[0][e] = true;
  }
  for (std::size_t k = 0; k < c.n; ++k)
    for (std::size_t i = 0; i < c.n; ++i)
      for (std::size_t j = 0; j < c.n; ++j)
        if (c.before[i][k] && c.before[k][j]) c.before[i][j] = true;
  for (auto [a, b] : raw.conflicts) c.conflict[a][b] = c.conflict[b][a] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < c.n; ++a)
      for (std::size_t b = 0; b < c.n; ++b)
        if (c.conflict[a][b])
          for (std::size_t x = 0; x < c.n; ++x)
            if (c.before[b][x] && !c.conflict[a][x]) {
              c.conflict[a][x] = c.conflict[x][a] = true;
              changed = true;
            }
  }
  return c;
}

inline bool is_config(const Closed& c, uint64_t mask) {
  if (!(mask & 1u)) return false;
  for (std::size_t e = 0; e < c.n; ++e) {
    if (!(mask >> e & 1u)) continue;
    for (std::size_t d = 0; d < c.n; ++d) {
      if (c.before[d][e] && !(mask >> d & 1u)) return false;
      if (c.conflict[d][e] && (mask >> d & 1u)) return false;
    }
  }
  return true;
}

/// Maximal configurations as bit masks, by powerset (n ≤ 20).
inline std::vector<uint64_t> maximal_masks(const fles::RawStructure& raw) {
  const Closed c = close(raw);
  std::vector<uint64_t> configs;
  for (uint64_t m = 0; m < (uint64_t{1} << c.n); ++m)
    if (is_config(c, m)) configs.push_back(m);
  std::vector<uint64_t> out;
  for (uint64_t m : configs) {
    bool maximal = true;
    for (uint64_t o : configs)
      if (o != m && (o & m) == m) maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

inline std::size_t count_configurations(const fles::RawStructure& raw) {
  const Closed c = close(raw);
  std::size_t n = 0;
  for (uint64_t m = 0; m < (uint64_t{1} << c.n); ++m) n += is_config(c, m);
  return n;
}

/// Words of all linear extensions of a member set, by depth-first
/// placement, with extra order pairs optionally imposed.
inline std::set<Word> words_of(const fles::RawStructure& raw, uint64_t mask,
                               const std::vector<std::pair<EventId, EventId>>& extra = {}) {
  const Closed c = close(raw);
  std::vector<uint64_t> need(c.n, 0);
  for (EventId a = 0; a < c.n; ++a)
    for (EventId b = 0; b < c.n; ++b)
      if (c.before[a][b] && (mask >> a & 1u)) need[b] |= uint64_t{1} << a;
  for (auto [a, b] : extra) need[b] |= uint64_t{1} << a;
  std::set<Word> out;
  Word w;
  auto walk = [&](auto&& self, uint64_t placed) -> void {
    if (placed == mask) {
      out.insert(w);
      return;
    }
    for (EventId e = 0; e < c.n; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if (!(mask & bit) || (placed & bit) || (need[e] & ~placed)) continue;
      const bool visible = !raw.labels[e].is_epsilon();
      if (visible) w.push_back(raw.labels[e]);
      self(self, placed | bit);
      if (visible) w.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

inline std::set<Word> language(const fles::RawStructure& raw) {
  std::set<Word> out;
  for (uint64_t m : maximal_masks(raw)) {
    auto w = words_of(raw, m);
    out.insert(w.begin(), w.end());
  }
  return out;
}

inline std::set<Word> language(const StructurePtr& s) { return language(s->raw()); }

inline bool includes(const std::set<Word>& big, const std::set<Word>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// All words of length ≤ max_len over the alphabet.
inline std::vector<Word> all_words(const std::vector<Label>& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Label l : alphabet) {
        Word x = w;
        x.push_back(l);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Label> alphabet(const StructurePtr& s) {
  std::set<Label> ls;
  for (EventId e = 0; e < s->size(); ++e)
    if (!s->label(e).is_epsilon()) ls.insert(s->label(e));
  return {ls.begin(), ls.end()};
}

/// Common word by brute force over both configurations' linearizations.
inline bool share_word(const fles::RawStructure& a, uint64_t ma, const fles::RawStructure& b, uint64_t mb) {
  const auto wa = words_of(a, ma);
  const auto wb = words_of(b, mb);
  for (const auto& w : wa)
    if (wb.count(w)) return true;
  return false;
}

struct RandomSpec {
  std::size_t max_events = 8;
  std::size_t labels = 3;
  double cause_p = 0.3;
  double conflict_p = 0.15;
  double epsilon_p = 0.1;
};

/// Random valid structure with up to spec.max_events non-⊥ events.
inline StructurePtr random_structure(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::string names = "ABCDEFGH";
  for (;;) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, spec.max_events)(rng);
    fles::RawStructure raw = fles::RawStructure::with_bottom();
    for (std::size_t e = 1; e <= k; ++e) {
      std::vector<EventId> causes;
      for (EventId d = 1; d < e; ++d)
        if (coin(rng) < spec.cause_p) causes.push_back(d);
      const bool eps = coin(rng) < spec.epsilon_p;
      const std::size_t li = std::uniform_int_distribution<std::size_t>(0, spec.labels - 1)(rng);
      raw.add_event(eps ? Label::epsilon() : Label::intern(std::string(1, names[li])), causes);
    }
    const Closed c = close(raw);
    for (EventId a = 1; a <= k; ++a)
      for (EventId b = a + 1; b <= k; ++b)
        if (!c.before[a][b] && coin(rng) < spec.conflict_p) raw.add_conflict(a, b);
    try {
      return fles::EventStructure::create(raw);
    } catch (const fles::InvalidStructure&) {
    }
  }
}

/// Strict order restricted to `members` (sorted event ids), as local indices.
inline std::vector<std::vector<bool>> order_on(const fles::RawStructure& raw, const std::vector<EventId>& members) {
  const Closed c = close(raw);
  const std::size_t k = members.size();
  std::vector<std::vector<bool>> o(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) o[i][j] = c.before[members[i]][members[j]];
  return o;
}

/// A configuration as seen by the brute-force embedding checks.
struct Poset {
  std::vector<Label> labels;
  std::vector<std::vector<bool>> before;
};

inline Poset poset(const fles::RawStructure& raw, const std::vector<EventId>& members) {
  Poset p;
  for (EventId e : members) p.labels.push_back(raw.labels[e]);
  p.before = order_on(raw, members);
  return p;
}

inline bool acyclic_union(const Poset& a, const Poset& b, const std::vector<std::size_t>& phi) {
  const std::size_t k = phi.size();
  std::vector<std::size_t> inv(k);
  for (std::size_t i = 0; i < k; ++i) inv[phi[i]] = i;
  std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r[i][j] = a.before[i][j] || b.before[phi[i]][phi[j]];
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = true;
  for (std::size_t i = 0; i < k; ++i)
    if (r[i][i]) return false;
  return true;
}

inline bool sufficient_map(const Poset& a, const Poset& b, const std::vector<std::size_t>& phi) {
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (b.before[phi[i]][phi[j]] && !a.before[i][j]) return false;
  return true;
}

/// Calls visit(phi) for every label-preserving bijection fixing index 0.
template <typename Visit>
void for_each_bijection(const Poset& a, const Poset& b, Visit&& visit) {
  const std::size_t k = a.labels.size();
  if (b.labels.size() != k) return;
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  do {
    bool ok = perm[0] == 0;
    for (std::size_t i = 0; i < k && ok; ++i) ok = a.labels[i] == b.labels[perm[i]];
    if (ok && !visit(perm)) return;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

inline bool exists_necessary(const Poset& a, const Poset& b) {
  bool found = false;
  for_each_bijection(a, b, [&](const std::vector<std::size_t>& phi) {
    found = acyclic_union(a, b, phi);
    return !found;
  });
  return found;
}

inline bool exists_sufficient(const Poset& a, const Poset& b) {
  bool found = false;
  for_each_bijection(a, b, [&](const std::vector<std::size_t>& phi) {
    found = acyclic_union(a, b, phi) && sufficient_map(a, b, phi);
    return !found;
  });
  return found;
}

/// Words of a poset by permutation.
inline std::set<Word> words(const Poset& p) {
  const std::size_t k = p.labels.size();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::set<Word> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j) ok = !p.before[perm[j]][perm[i]];
    if (!ok) continue;
    Word w;
    for (std::size_t i : perm)
      if (!p.labels[i].is_epsilon()) w.push_back(p.labels[i]);
    out.insert(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Conflict-free structure over the given labels with random causality.
inline StructurePtr random_order(std::mt19937_64& rng, std::vector<Label> labels, double cause_p) {
  std::shuffle(labels.begin(), labels.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  fles::RawStructure raw = fles::RawStructure::with_bottom();
  for (std::size_t e = 1; e <= labels.size(); ++e) {
    std::vector<EventId> causes;
    for (EventId d = 1; d < e; ++d)
      if (coin(rng) < cause_p) causes.push_back(d);
    raw.add_event(labels[e - 1], causes);
  }
  return fles::EventStructure::create(raw);
}

/// Random multiset of k labels drawn from the first `alphabet` letters.
inline std::vector<Label> random_labels(std::mt19937_64& rng, std::size_t k, std::size_t alphabet) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < k; ++i) {
    const auto li = std::uniform_int_distribution<std::size_t>(0, alphabet - 1)(rng);
    out.push_back(Label::intern(std::string(1, static_cast<char>('A' + li))));
  }
  return out;
}

}  // namespace oracle
