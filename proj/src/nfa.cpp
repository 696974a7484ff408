#include "fles/nfa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fles {

std::size_t Nfa::reachable_count() const {
  if (state_count == 0) return 0;
  const auto out = outgoing();
  std::vector<bool> seen(state_count, false);
  std::vector<StateId> stack{initial};
  seen[initial] = true;
  std::size_t n = 0;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    ++n;
    for (const auto& t : out[q]) {
      if (!seen[t.to]) {
        seen[t.to] = true;
        stack.push_back(t.to);
      }
    }
  }
  return n;
}

std::vector<std::vector<Transition>> Nfa::outgoing() const {
  std::vector<std::vector<Transition>> out(state_count);
  for (const auto& t : transitions) out[t.from].push_back(t);
  return out;
}

bool Nfa::is_accepting(StateId q) const { return std::binary_search(accepting.begin(), accepting.end(), q); }

Nfa encode(const StructurePtr& sp, const Limits& limits) {
  const EventStructure& s = *sp;
  Nfa a;
  std::unordered_map<Bitset, StateId, BitsetHash> index;
  auto add_state = [&](Bitset c) {
    if (a.configurations.size() >= limits.max_nfa_states) {
      throw ResourceLimitExceeded("automaton states", limits.max_nfa_states);
    }
    const auto id = static_cast<StateId>(a.configurations.size());
    index.emplace(c, id);
    a.configurations.push_back(std::move(c));
    return id;
  };
  add_state(Bitset(s.size()));
  Bitset start(s.size());
  start.set(kBottom);
  a.initial = add_state(start);

  struct Raw {
    StateId from;
    EventId event;
    StateId to;
  };
  std::vector<Raw> raw;
  std::vector<bool> maximal(2, false);
  for (StateId q = 1; q < a.configurations.size(); ++q) {
    bool extended = false;
    for (EventId e = 1; e < s.size(); ++e) {
      const Bitset& c = a.configurations[q];
      if (c.test(e) || !s.ancestors(e).is_subset_of(c) || s.conflicts(e).intersects(c)) continue;
      extended = true;
      Bitset next = c;
      next.set(e);
      auto it = index.find(next);
      const StateId to = it != index.end() ? it->second : add_state(std::move(next));
      maximal.resize(a.configurations.size(), false);
      raw.push_back({q, e, to});
    }
    maximal[q] = !extended;
  }
  a.state_count = a.configurations.size();
  maximal.resize(a.state_count, false);

  // ε-closure over the acyclic ε graph, in reverse creation order so that
  // every target is finished before its sources.
  std::vector<std::vector<Raw>> out(a.state_count);
  for (const auto& r : raw) out[r.from].push_back(r);
  std::vector<std::vector<StateId>> closure(a.state_count);
  for (StateId q = static_cast<StateId>(a.state_count); q-- > 0;) {
    std::set<StateId> cl{q};
    for (const auto& r : out[q]) {
      if (s.label(r.event).is_epsilon()) cl.insert(closure[r.to].begin(), closure[r.to].end());
    }
    closure[q].assign(cl.begin(), cl.end());
  }
  std::set<Transition> moves;
  std::set<Label> alphabet;
  for (StateId q = 0; q < a.state_count; ++q) {
    bool accept = false;
    for (StateId p : closure[q]) {
      accept = accept || maximal[p];
      for (const auto& r : out[p]) {
        const Label l = s.label(r.event);
        if (l.is_epsilon()) continue;
        moves.insert({q, l, r.to});
        alphabet.insert(l);
      }
    }
    if (accept && q != 0) a.accepting.push_back(q);
  }
  a.transitions.assign(moves.begin(), moves.end());
  a.alphabet.assign(alphabet.begin(), alphabet.end());
  return a;
}

Language nfa_language(const Nfa& a, const Limits& limits) {
  const auto out = a.outgoing();
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<uint8_t> mark(a.state_count, 0);
  std::vector<std::vector<Word>> words(a.state_count);
  auto visit = [&](auto&& self, StateId q) -> void {
    mark[q] = 1;
    std::vector<Word> acc;
    if (a.is_accepting(q)) acc.emplace_back();
    for (const auto& t : out[q]) {
      if (mark[t.to] == 1) throw std::invalid_argument("automaton has a cycle");
      if (mark[t.to] == 0) self(self, t.to);
      for (const auto& w : words[t.to]) {
        Word x;
        x.reserve(w.size() + 1);
        x.push_back(t.label);
        x.insert(x.end(), w.begin(), w.end());
        acc.push_back(std::move(x));
        if (acc.size() > 2 * limits.max_words) {
          std::sort(acc.begin(), acc.end());
          acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
          if (acc.size() > limits.max_words) throw ResourceLimitExceeded("words", limits.max_words);
        }
      }
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    if (acc.size() > limits.max_words) throw ResourceLimitExceeded("words", limits.max_words);
    words[q] = std::move(acc);
    mark[q] = 2;
  };
  if (a.state_count == 0) return {};
  visit(visit, a.initial);
  return Language(words[a.initial]);
}

NfaInclusion nfa_inclusion(const Nfa& a, const Nfa& b, const Limits& limits) {
  const auto out_a = a.outgoing();
  const auto out_b = b.outgoing();
  struct Node {
    StateId q;
    std::vector<StateId> subset;
    std::size_t parent;
    Label via;
  };
  std::vector<Node> nodes;
  std::map<std::pair<StateId, std::vector<StateId>>, std::size_t> seen;
  auto push = [&](StateId q, std::vector<StateId> subset, std::size_t parent, Label via) {
    auto key = std::make_pair(q, subset);
    if (seen.count(key)) return;
    if (nodes.size() >= limits.max_subset_states) {
      throw ResourceLimitExceeded("product states", limits.max_subset_states);
    }
    seen.emplace(std::move(key), nodes.size());
    nodes.push_back({q, std::move(subset), parent, via});
  };
  NfaInclusion result;
  if (a.state_count == 0) {
    result.included = true;
    return result;
  }
  std::vector<StateId> start;
  if (b.state_count > 0) start.push_back(b.initial);
  push(a.initial, start, static_cast<std::size_t>(-1), Label{});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const StateId q = nodes[i].q;
    const std::vector<StateId> subset = nodes[i].subset;
    if (a.is_accepting(q) && std::none_of(subset.begin(), subset.end(), [&](StateId p) { return b.is_accepting(p); })) {
      Word w;
      for (std::size_t k = i; nodes[k].parent != static_cast<std::size_t>(-1); k = nodes[k].parent) w.push_back(nodes[k].via);
      std::reverse(w.begin(), w.end());
      result.explored = nodes.size();
      result.witness = std::move(w);
      return result;
    }
    for (const auto& t : out_a[q]) {
      std::set<StateId> next;
      for (StateId p : subset) {
        for (const auto& u : out_b[p]) {
          if (u.label == t.label) next.insert(u.to);
        }
      }
      push(t.to, std::vector<StateId>(next.begin(), next.end()), i, t.label);
    }
  }
  result.included = true;
  result.explored = nodes.size();
  return result;
}

std::string export_text(const Nfa& a) {
  std::ostringstream os;
  os << "states: " << a.state_count << "\n";
  os << "initial: " << a.initial << "\n";
  os << "accepting:";
  for (StateId q : a.accepting) os << ' ' << q;
  os << "\n";
  for (const auto& t : a.transitions) os << t.from << ' ' << t.label.name() << ' ' << t.to << "\n";
  return os.str();
}

}  // namespace fles
