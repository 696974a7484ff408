#include "fles/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fles {

bool DiGraph::has_self_loop() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.first == e.second; });
}

DiGraph DiGraph::without_self_loops() const {
  DiGraph g{n, {}};
  std::copy_if(edges.begin(), edges.end(), std::back_inserter(g.edges), [](const Edge& e) { return e.first != e.second; });
  return g;
}

bool UGraph::has_self_loop() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.first == e.second; });
}

UGraph UGraph::without_self_loops() const {
  UGraph g{n, {}, {}};
  std::vector<std::size_t> renumber(edges.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) continue;
    renumber[i] = g.edges.size();
    g.edges.push_back(edges[i]);
  }
  for (std::size_t b : marked) {
    if (b < edges.size() && renumber[b] != static_cast<std::size_t>(-1)) g.marked.push_back(renumber[b]);
  }
  return g;
}

DiGraph UGraph::bidirected() const {
  DiGraph d{n, {}};
  for (const auto& [u, v] : edges) {
    d.edges.emplace_back(u, v);
    d.edges.emplace_back(v, u);
  }
  return d;
}

namespace {

void require_graph(std::size_t n, const std::vector<Edge>& edges, bool self_loop) {
  if (n <= 1) throw std::invalid_argument("graph needs at least two vertices");
  if (self_loop) throw std::invalid_argument("graph contains a self-loop");
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
}

/// Adds the position events of `g` below `root` and returns nothing; the
/// event id of (f, j) is stored in `pos[f][j]` for j in 0..n-1.
void add_hc_part(RawStructure& raw, const DiGraph& g, EventId root, std::vector<std::vector<EventId>>& pos) {
  const std::size_t n = g.n;
  const std::size_t m = g.edges.size();
  const Label eps = Label::epsilon();
  const Label x = Label::intern("x");
  pos.assign(m, std::vector<EventId>(n));
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t j = 0; j < n; ++j) pos[f][j] = raw.add_event(eps, {root});
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t f2 = 0; f2 < m; ++f2) {
      if (g.edges[f].second != g.edges[f2].first) continue;
      for (std::size_t j = 0; j < n; ++j) raw.add_event(x, {pos[f][j], pos[f2][(j + 1) % n]});
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) raw.add_conflict(pos[f][j], pos[f][k]);
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t f2 = f + 1; f2 < m; ++f2) {
      const bool same_target = g.edges[f].second == g.edges[f2].second;
      for (std::size_t j = 0; j < n; ++j) {
        if (same_target) {
          for (std::size_t k = 0; k < n; ++k) raw.add_conflict(pos[f][j], pos[f2][k]);
        } else {
          raw.add_conflict(pos[f][j], pos[f2][j]);
        }
      }
    }
  }
}

}  // namespace

StructurePtr hc_structure(const DiGraph& g) {
  require_graph(g.n, g.edges, g.has_self_loop());
  RawStructure raw = RawStructure::with_bottom();
  std::vector<std::vector<EventId>> pos;
  add_hc_part(raw, g, kBottom, pos);
  return EventStructure::create(std::move(raw));
}

DhcPair dhc_pair(const UGraph& g) {
  require_graph(g.n, g.edges, g.has_self_loop());
  for (std::size_t b : g.marked) {
    if (b >= g.edges.size()) throw std::invalid_argument("marked edge index out of range");
  }
  const std::size_t n = g.n;
  const std::size_t m = g.marked.size();
  const std::size_t bh = g.half_marked();
  const Label eps = Label::epsilon();
  const Label x = Label::intern("x");
  const Label y = Label::intern("y");
  std::vector<Label> lb;
  for (std::size_t i = 0; i < m; ++i) lb.push_back(Label::intern("lb" + std::to_string(i + 1)));

  RawStructure left = RawStructure::with_bottom();
  {
    EventId prev = kBottom;
    for (std::size_t i = 0; i < n; ++i) prev = left.add_event(x, {prev});
    for (std::size_t i = 0; i < m; ++i) {
      const EventId in = left.add_event(lb[i], {kBottom});
      const EventId out = left.add_event(eps, {kBottom});
      left.add_conflict(in, out);
      left.add_event(y, {in});
    }
  }

  RawStructure right = RawStructure::with_bottom();
  {
    std::vector<EventId> in(m);
    for (std::size_t i = 0; i < m; ++i) {
      in[i] = right.add_event(lb[i], {kBottom});
      right.add_conflict(in[i], right.add_event(eps, {kBottom}));
    }
    const EventId es = right.add_event(eps, {kBottom});
    if (m > 0) {
      // Without marked edges the x-chain would accept x^n unconditionally.
      EventId ev1 = kBottom;
      EventId prev = kBottom;
      for (std::size_t i = 0; i < n; ++i) {
        prev = right.add_event(x, {prev});
        if (i == 0) ev1 = prev;
      }
      right.add_conflict(es, ev1);
      std::vector<EventId> d(m);
      std::vector<EventId> fix(m);
      fix[0] = right.add_event(eps, {kBottom});
      EventId below = kBottom;
      for (std::size_t i = 0; i < m; ++i) {
        d[i] = right.add_event(y, {below});
        below = d[i];
        if (i + 1 < m) fix[i + 1] = right.add_event(eps, {d[i]});
        right.add_conflict(d[i], fix[i]);
      }
      for (std::size_t i = 0; i <= bh && i < m; ++i) right.add_conflict(fix[i], ev1);
    }
    std::vector<std::vector<EventId>> pos;
    add_hc_part(right, g.bidirected(), es, pos);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t f = g.marked[i];
      for (std::size_t k = 0; k < n; ++k) {
        right.add_conflict(in[i], pos[2 * f][k]);
        right.add_conflict(in[i], pos[2 * f + 1][k]);
      }
    }
  }
  return {EventStructure::create(std::move(left)), EventStructure::create(std::move(right))};
}

bool brute_hc(const DiGraph& g) {
  if (g.n == 0 || g.n > 9) throw std::invalid_argument("brute_hc supports 1..9 vertices");
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (const auto& [u, v] : g.edges) {
    if (u >= g.n || v >= g.n) throw std::invalid_argument("edge endpoint out of range");
    adj[u][v] = true;
  }
  std::vector<std::size_t> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < g.n && ok; ++i) ok = adj[order[i]][order[(i + 1) % g.n]];
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool brute_dhc(const UGraph& g) {
  if (g.n == 0 || g.n > 8 || g.marked.size() > 8) throw std::invalid_argument("brute_dhc supports n <= 8 and |B| <= 8");
  const std::size_t m = g.marked.size();
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > g.half_marked()) continue;
    UGraph gd{g.n, {}, {}};
    for (std::size_t f = 0; f < g.edges.size(); ++f) {
      bool removed = false;
      for (std::size_t i = 0; i < m; ++i) removed = removed || ((mask >> i & 1u) && g.marked[i] == f);
      if (!removed) gd.edges.push_back(g.edges[f]);
    }
    if (!brute_hc(gd.bidirected())) return false;
  }
  return true;
}

}  // namespace fles
