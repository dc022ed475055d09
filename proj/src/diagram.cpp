#include "satake/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace satake {

namespace {

// Split an id into (alpha prefix, numeric part or -1, copy suffix or 0) so
// that "a2" sorts before "a10" and "x.1" before "x.2".
std::tuple<std::string, long, long> id_key(const std::string& id) {
  std::string prefix;
  std::size_t i = 0;
  while (i < id.size() && !(id[i] >= '0' && id[i] <= '9') && id[i] != '.') {
    prefix += id[i++];
  }
  long num = -1;
  if (i < id.size() && id[i] >= '0' && id[i] <= '9') {
    num = 0;
    while (i < id.size() && id[i] >= '0' && id[i] <= '9') {
      num = num * 10 + (id[i++] - '0');
    }
  }
  long copy = 0;
  if (i < id.size() && id[i] == '.') {
    copy = std::stol(id.substr(i + 1));
  }
  return {prefix, num, copy};
}

}  // namespace

bool node_id_less(const std::string& a, const std::string& b) {
  return id_key(a) < id_key(b);
}

int Diagram::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (nodes[i] == id) return i;
  }
  return -1;
}

void add_node(Diagram& d, const std::string& id, int mark) {
  if (d.index_of(id) >= 0) {
    throw contract_error("duplicate node id: " + id);
  }
  d.nodes.push_back(id);
  d.marks.push_back(mark);
}

void add_edge(Diagram& d, const std::string& a, const std::string& b,
              int mult, const std::string& short_end) {
  const int ia = d.index_of(a), ib = d.index_of(b);
  if (ia < 0 || ib < 0 || ia == ib) {
    throw contract_error("bad edge endpoints: " + a + ", " + b);
  }
  DiagramEdge e;
  e.u = std::min(ia, ib);
  e.v = std::max(ia, ib);
  e.mult = mult;
  if (!short_end.empty()) {
    const int is = d.index_of(short_end);
    if (is != ia && is != ib) {
      throw contract_error("arrow endpoint not on edge: " + short_end);
    }
    e.arrow = is;
  }
  for (const DiagramEdge& f : d.edges) {
    if (f.u == e.u && f.v == e.v) {
      throw contract_error("duplicate edge: " + a + ", " + b);
    }
  }
  d.edges.push_back(e);
}

SatakeDiagram monochrome(const Diagram& d, bool all_black) {
  SatakeDiagram s;
  s.base = d;
  s.black.assign(d.nodes.size(), all_black);
  s.bar.assign(d.nodes.size(), -1);
  return s;
}

void validate(const SatakeDiagram& d) {
  const int n = d.size();
  if (static_cast<int>(d.black.size()) != n ||
      static_cast<int>(d.bar.size()) != n ||
      static_cast<int>(d.base.marks.size()) != n) {
    throw contract_error("diagram arrays out of sync");
  }
  for (int i = 0; i < n; ++i) {
    const int p = d.bar[i];
    if (p == -1) continue;
    if (p < 0 || p >= n || p == i) {
      throw contract_error("bar partner out of range");
    }
    if (d.bar[p] != i) throw contract_error("bar is not an involution");
    if (d.black[i] || d.black[p]) {
      throw contract_error("bar on a black node");
    }
  }
  for (const DiagramEdge& e : d.base.edges) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) {
      throw contract_error("edge endpoints out of range");
    }
    if (e.mult < 1 || e.mult > 3) throw contract_error("bad multiplicity");
    if (e.arrow != -1 && e.arrow != e.u && e.arrow != e.v) {
      throw contract_error("arrow not on its edge");
    }
    if (e.mult == 1 && e.arrow != -1) {
      throw contract_error("single edge cannot carry an arrow");
    }
  }
}

// ---------------------------------------------------------------------------
// Canonical form: individualization-refinement search for the lexicographic
// minimum encoding over all admissible node orderings.
// ---------------------------------------------------------------------------

namespace {

struct CanonCtx {
  const SatakeDiagram* d = nullptr;
  int n = 0;
  // adjacency[i] = list of (j, mult, role) where role: 0 undirected,
  // 1 = i is the short end, 2 = j is the short end.
  std::vector<std::vector<std::tuple<int, int, int>>> adj;
  std::string best;
  bool have_best = false;
};

std::string encode(const CanonCtx& ctx, const std::vector<int>& pos) {
  // pos[node] = position in the candidate ordering.
  const SatakeDiagram& d = *ctx.d;
  std::ostringstream out;
  std::vector<int> node_at(ctx.n);
  for (int v = 0; v < ctx.n; ++v) node_at[pos[v]] = v;
  for (int p = 0; p < ctx.n; ++p) {
    const int v = node_at[p];
    out << (d.black[v] ? 'b' : 'w') << ':' << d.base.marks[v] << ':'
        << (d.bar[v] >= 0 ? pos[d.bar[v]] : -1) << ';';
  }
  std::vector<std::tuple<int, int, int, int>> edges;
  for (const DiagramEdge& e : d.base.edges) {
    int a = pos[e.u], b = pos[e.v];
    int arrow = e.arrow >= 0 ? pos[e.arrow] : -1;
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b, e.mult, arrow);
  }
  std::sort(edges.begin(), edges.end());
  for (auto& [a, b, m, ar] : edges) {
    out << a << '-' << b << ':' << m << ':' << ar << ';';
  }
  return out.str();
}

// Refine an ordered partition (list of cells) to an equitable one: two nodes
// stay in one cell only if they see the same multiset of (cell, mult, role)
// over edges and the same bar-partner cell. Cell order is kept stable so the
// search is deterministic.
void refine(const CanonCtx& ctx, std::vector<std::vector<int>>& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(ctx.n, -1);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      for (int v : cells[c]) cell_of[v] = c;
    }
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::string, std::vector<int>> split;
      for (int v : cell) {
        std::vector<std::tuple<int, int, int>> sig;
        for (const auto& [j, mult, role] : ctx.adj[v]) {
          sig.emplace_back(cell_of[j], mult, role);
        }
        std::sort(sig.begin(), sig.end());
        std::ostringstream key;
        key << (ctx.d->bar[v] >= 0 ? cell_of[ctx.d->bar[v]] : -1) << '|';
        for (auto& [c, m, r] : sig) key << c << ',' << m << ',' << r << ';';
        split[key.str()].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [key, members] : split) next.push_back(members);
    }
    cells = std::move(next);
  }
}

void search(CanonCtx& ctx, std::vector<std::vector<int>> cells) {
  refine(ctx, cells);
  int branch_cell = -1;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    if (cells[c].size() > 1) {
      branch_cell = c;
      break;
    }
  }
  if (branch_cell == -1) {
    std::vector<int> pos(ctx.n);
    int p = 0;
    for (const std::vector<int>& cell : cells) pos[cell[0]] = p++;
    std::string enc = encode(ctx, pos);
    if (!ctx.have_best || enc < ctx.best) {
      ctx.best = std::move(enc);
      ctx.have_best = true;
    }
    return;
  }
  for (int v : cells[branch_cell]) {
    std::vector<std::vector<int>> child;
    child.reserve(cells.size() + 1);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (c != branch_cell) {
        child.push_back(cells[c]);
        continue;
      }
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[c]) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
    }
    search(ctx, std::move(child));
  }
}

}  // namespace

std::string canonical_form(const SatakeDiagram& d) {
  validate(d);
  CanonCtx ctx;
  ctx.d = &d;
  ctx.n = d.size();
  if (ctx.n == 0) return "empty";
  ctx.adj.assign(ctx.n, {});
  for (const DiagramEdge& e : d.base.edges) {
    int role_u = 0, role_v = 0;
    if (e.arrow == e.u) role_u = 1, role_v = 2;
    if (e.arrow == e.v) role_u = 2, role_v = 1;
    ctx.adj[e.u].emplace_back(e.v, e.mult, role_u);
    ctx.adj[e.v].emplace_back(e.u, e.mult, role_v);
  }
  // Initial partition by node invariant: color, mark, barred?, degree,
  // incident edge profile.
  std::map<std::string, std::vector<int>> groups;
  for (int v = 0; v < ctx.n; ++v) {
    std::vector<std::pair<int, int>> prof;
    for (const auto& [j, mult, role] : ctx.adj[v]) prof.emplace_back(mult, role);
    std::sort(prof.begin(), prof.end());
    std::ostringstream key;
    key << (d.black[v] ? 'b' : 'w') << '|' << d.base.marks[v] << '|'
        << (d.bar[v] >= 0) << '|';
    for (auto& [m, r] : prof) key << m << ',' << r << ';';
    groups[key.str()].push_back(v);
  }
  std::vector<std::vector<int>> cells;
  for (auto& [key, members] : groups) cells.push_back(members);
  search(ctx, std::move(cells));
  return ctx.best;
}

std::vector<SatakeDiagram> components(const SatakeDiagram& d) {
  validate(d);
  const int n = d.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const DiagramEdge& e : d.base.edges) unite(e.u, e.v);
  for (int i = 0; i < n; ++i) {
    if (d.bar[i] >= 0) unite(i, d.bar[i]);
  }
  // Group nodes by root, keeping the original node order inside and across
  // components (components ordered by their smallest node index).
  std::vector<int> roots;
  std::map<int, int> comp_of_root;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (!comp_of_root.count(r)) {
      comp_of_root[r] = static_cast<int>(roots.size());
      roots.push_back(r);
    }
  }
  std::vector<SatakeDiagram> result(roots.size());
  std::vector<int> new_index(n, -1);
  for (int i = 0; i < n; ++i) {
    SatakeDiagram& comp = result[comp_of_root[find(i)]];
    new_index[i] = comp.size();
    comp.base.nodes.push_back(d.base.nodes[i]);
    comp.base.marks.push_back(d.base.marks[i]);
    comp.black.push_back(d.black[i]);
    comp.bar.push_back(-1);
  }
  for (int i = 0; i < n; ++i) {
    if (d.bar[i] >= 0) {
      result[comp_of_root[find(i)]].bar[new_index[i]] = new_index[d.bar[i]];
    }
  }
  for (const DiagramEdge& e : d.base.edges) {
    SatakeDiagram& comp = result[comp_of_root[find(e.u)]];
    DiagramEdge f;
    f.u = new_index[e.u];
    f.v = new_index[e.v];
    if (f.u > f.v) std::swap(f.u, f.v);
    f.mult = e.mult;
    f.arrow = e.arrow >= 0 ? new_index[e.arrow] : -1;
    comp.base.edges.push_back(f);
  }
  return result;
}

SatakeDiagram erase(const ExtendedSatakeDiagram& d,
                    const std::set<std::string>& s) {
  validate(d.base);
  if (s.empty()) throw contract_error("erasure set must be nonempty");
  const SatakeDiagram& sd = d.base;
  std::vector<bool> gone(sd.size(), false);
  for (const std::string& id : s) {
    const int i = sd.base.index_of(id);
    if (i < 0) throw contract_error("erasure of unknown node: " + id);
    if (sd.black[i]) throw contract_error("erasure of a black node: " + id);
    gone[i] = true;
  }
  for (int i = 0; i < sd.size(); ++i) {
    if (gone[i] && sd.bar[i] >= 0 && !gone[sd.bar[i]]) {
      throw contract_error("erasure set is not bar-closed at " +
                           sd.base.nodes[i]);
    }
  }
  SatakeDiagram out;
  std::vector<int> new_index(sd.size(), -1);
  for (int i = 0; i < sd.size(); ++i) {
    if (gone[i]) continue;
    new_index[i] = out.size();
    out.base.nodes.push_back(sd.base.nodes[i]);
    out.base.marks.push_back(0);
    out.black.push_back(sd.black[i]);
    out.bar.push_back(-1);
  }
  for (int i = 0; i < sd.size(); ++i) {
    if (!gone[i] && sd.bar[i] >= 0) out.bar[new_index[i]] = new_index[sd.bar[i]];
  }
  for (const DiagramEdge& e : sd.base.edges) {
    if (gone[e.u] || gone[e.v]) continue;
    DiagramEdge f;
    f.u = new_index[e.u];
    f.v = new_index[e.v];
    if (f.u > f.v) std::swap(f.u, f.v);
    f.mult = e.mult;
    f.arrow = e.arrow >= 0 ? new_index[e.arrow] : -1;
    out.base.edges.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shape classification of a connected plain diagram.
// ---------------------------------------------------------------------------

SimpleType classify_shape(const Diagram& d) {
  const int n = d.size();
  if (n == 0) throw contract_error("empty diagram has no type");
  if (n == 1) {
    if (!d.edges.empty()) throw contract_error("loop edge");
    return SimpleType{TypeLetter::A, 1};
  }
  if (static_cast<int>(d.edges.size()) != n - 1) {
    throw contract_error("diagram has a cycle: not of finite type");
  }
  std::vector<std::vector<int>> adj(n);
  int doubles = 0, triples = 0;
  const DiagramEdge* special = nullptr;
  for (const DiagramEdge& e : d.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    if (e.mult == 2) {
      ++doubles;
      special = &e;
    }
    if (e.mult == 3) {
      ++triples;
      special = &e;
    }
  }
  if (triples > 0) {
    if (n != 2 || doubles > 0 || triples > 1) {
      throw contract_error("triple bond outside rank 2: not of finite type");
    }
    return SimpleType{TypeLetter::G, 2};
  }
  if (doubles > 1) {
    throw contract_error("two double bonds: not of finite type");
  }
  std::vector<int> deg(n);
  int trivalent = -1, high = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(adj[i].size());
    if (deg[i] >= 3) {
      ++high;
      trivalent = i;
    }
  }
  if (doubles == 1) {
    if (high > 0) {
      throw contract_error("double bond on a branched diagram: not finite");
    }
    if (special->arrow == -1) {
      throw contract_error("undirected double bond: not of finite type");
    }
    if (n == 2) return SimpleType{TypeLetter::B, 2};
    const int end_u = deg[special->u] == 1 ? special->u : -1;
    const int end_v = deg[special->v] == 1 ? special->v : -1;
    if (end_u == -1 && end_v == -1) {
      // Interior double bond on a path: only the middle of a 4-chain works.
      if (n != 4) throw contract_error("interior double bond: not finite");
      return SimpleType{TypeLetter::F, 4};
    }
    const int end = end_u != -1 ? end_u : end_v;
    if (special->arrow == end) return SimpleType{TypeLetter::B, n};
    return SimpleType{TypeLetter::C, n};
  }
  // Simply laced.
  if (high == 0) return SimpleType{TypeLetter::A, n};
  if (high > 1 || deg[trivalent] > 3) {
    throw contract_error("branching beyond one trivalent node: not finite");
  }
  std::vector<int> arms;
  for (int start : adj[trivalent]) {
    int len = 1, prev = trivalent, cur = start;
    while (deg[cur] == 2) {
      const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    // Node count: the trivalent node plus the three arms.
    return SimpleType{TypeLetter::D, arms[2] + 3};
  }
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return SimpleType{TypeLetter::E, 6};
    if (arms[2] == 3) return SimpleType{TypeLetter::E, 7};
    if (arms[2] == 4) return SimpleType{TypeLetter::E, 8};
  }
  throw contract_error("branched shape is not of finite type");
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

std::string serialize(const SatakeDiagram& d) {
  validate(d);
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return node_id_less(d.base.nodes[a], d.base.nodes[b]);
  });
  std::ostringstream out;
  for (int i : order) {
    out << d.base.nodes[i] << ' ' << (d.black[i] ? "black" : "white") << ' '
        << d.base.marks[i];
    if (d.bar[i] >= 0) out << ' ' << d.base.nodes[d.bar[i]];
    out << '\n';
  }
  std::vector<const DiagramEdge*> edges;
  for (const DiagramEdge& e : d.base.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [&](const DiagramEdge* a, const DiagramEdge* b) {
              const std::string &au = d.base.nodes[a->u],
                                &av = d.base.nodes[a->v],
                                &bu = d.base.nodes[b->u],
                                &bv = d.base.nodes[b->v];
              const auto ka = std::minmax(au, av, node_id_less);
              const auto kb = std::minmax(bu, bv, node_id_less);
              if (node_id_less(ka.first, kb.first)) return true;
              if (node_id_less(kb.first, ka.first)) return false;
              return node_id_less(ka.second, kb.second);
            });
  for (const DiagramEdge* e : edges) {
    std::string a = d.base.nodes[e->u], b = d.base.nodes[e->v];
    if (node_id_less(b, a)) std::swap(a, b);
    out << a << ' ' << b << ' ' << e->mult;
    if (e->mult >= 2 && e->arrow >= 0) out << ' ' << d.base.nodes[e->arrow];
    out << '\n';
  }
  return out.str();
}

SatakeDiagram parse_satake(const std::string& text) {
  SatakeDiagram d;
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, std::string>> pending_bars;
  std::vector<std::array<std::string, 4>> edge_lines;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.size() >= 2 && (tok[1] == "white" || tok[1] == "black")) {
      if (tok.size() < 3 || tok.size() > 4) {
        throw parse_error("bad node line: " + line);
      }
      add_node(d.base, tok[0], std::stoi(tok[2]));
      d.black.push_back(tok[1] == "black");
      d.bar.push_back(-1);
      if (tok.size() == 4) {
        pending_bars.emplace_back(d.size() - 1, tok[3]);
      }
    } else if (tok.size() == 3 || tok.size() == 4) {
      std::array<std::string, 4> e{tok[0], tok[1], tok[2],
                                   tok.size() == 4 ? tok[3] : ""};
      edge_lines.push_back(e);
    } else {
      throw parse_error("bad diagram line: " + line);
    }
  }
  for (auto& [i, partner] : pending_bars) {
    const int j = d.base.index_of(partner);
    if (j < 0) throw parse_error("bar partner unknown: " + partner);
    d.bar[i] = j;
  }
  for (auto& [a, b, m, arrow] : edge_lines) {
    add_edge(d.base, a, b, std::stoi(m), arrow);
  }
  validate(d);
  return d;
}

}  // namespace satake
