#include "powfact/rauzy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace powfact {

RauzyGraph build_rauzy(const Word& w, std::size_t l) {
  if (l < 1 || l > w.size())
    throw std::invalid_argument("Rauzy level out of range");
  RauzyGraph g;
  g.level = l;
  auto vs = factor_set(w, l);
  g.vertices.assign(vs.begin(), vs.end());
  if (l < w.size()) {
    auto es = factor_set(w, l + 1);
    g.edges.assign(es.begin(), es.end());
  }
  return g;
}

namespace {

struct AdjEntry {
  std::size_t target;
  std::size_t edge;  // index into g.edges
};

// Bounded cycle search: from each start vertex s, walk simple paths through
// vertices of index > s only, so every circuit is reported exactly once,
// anchored at its least vertex.
void circuits_from(const RauzyGraph& g,
                   const std::vector<std::vector<AdjEntry>>& adj,
                   std::size_t start, std::size_t max_size,
                   std::vector<std::size_t>& path_v,
                   std::vector<std::size_t>& path_e, std::vector<char>& on_path,
                   std::vector<Circuit>& out) {
  const std::size_t v = path_v.back();
  for (const AdjEntry& a : adj[v]) {
    if (a.target == start) {
      Circuit c;
      for (std::size_t idx : path_v) c.vertices.push_back(g.vertices[idx]);
      for (std::size_t idx : path_e) c.edges.push_back(g.edges[idx]);
      c.edges.push_back(g.edges[a.edge]);
      out.push_back(std::move(c));
    } else if (a.target > start && !on_path[a.target] &&
               path_v.size() < max_size) {
      on_path[a.target] = 1;
      path_v.push_back(a.target);
      path_e.push_back(a.edge);
      circuits_from(g, adj, start, max_size, path_v, path_e, on_path, out);
      path_e.pop_back();
      path_v.pop_back();
      on_path[a.target] = 0;
    }
  }
}

}  // namespace

std::vector<Circuit> elementary_circuits(const RauzyGraph& g,
                                         std::size_t max_size) {
  if (max_size < 1) throw std::invalid_argument("max_size must be positive");
  std::unordered_map<std::string, std::size_t> vertex_index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vertex_index.emplace(g.vertices[i].bytes(), i);

  std::vector<std::vector<AdjEntry>> adj(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    std::size_t src = vertex_index.at(edge_source(g.edges[e]).bytes());
    std::size_t dst = vertex_index.at(edge_target(g.edges[e]).bytes());
    adj[src].push_back({dst, e});
  }
  for (auto& row : adj)
    std::sort(row.begin(), row.end(),
              [](const AdjEntry& a, const AdjEntry& b) {
                return a.target < b.target;
              });

  std::vector<Circuit> out;
  std::vector<std::size_t> path_v, path_e;
  std::vector<char> on_path(g.vertices.size(), 0);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    path_v.assign(1, s);
    path_e.clear();
    on_path.assign(g.vertices.size(), 0);
    on_path[s] = 1;
    circuits_from(g, adj, s, max_size, path_v, path_e, on_path, out);
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices < b.vertices;
  });
  return out;
}

namespace {

// Resolve an elementary circuit of size <= level to its (q, level) identity
// and verify the structural shape. A failure here would falsify the
// characterization of small circuits, so it is a hard abort.
SmallCircuit identify_small_circuit(const Word& w, std::size_t level,
                                    const Circuit& c) {
  const Word& vertex = c.vertices.front();
  Word p = vertex.prefix(c.size());
  bool shape_ok = is_primitive(p) && rational_power(p, level) == vertex;
  Word q = shape_ok ? canonical_rotation(p) : p;
  if (shape_ok) {
    std::set<Word> expect_v, expect_e;
    for (const Word& r : conjugate_set(q)) {
      expect_v.insert(rational_power(r, level));
      expect_e.insert(rational_power(r, level + 1));
    }
    std::set<Word> got_v(c.vertices.begin(), c.vertices.end());
    std::set<Word> got_e(c.edges.begin(), c.edges.end());
    shape_ok = expect_v == got_v && expect_e == got_e;
  }
  if (!shape_ok)
    throw FalsificationError("small circuit at level " + std::to_string(level) +
                           " of '" + w.str() +
                           "' violates the structural shape");
  return {q, level};
}

}  // namespace

std::vector<SmallCircuit> small_circuits_graph(const Word& w) {
  std::set<SmallCircuit> found;
  for (std::size_t l = 1; l + 1 <= w.size(); ++l) {
    RauzyGraph g = build_rauzy(w, l);
    for (const Circuit& c : elementary_circuits(g, l))
      found.insert(identify_small_circuit(w, l, c));
  }
  return {found.begin(), found.end()};
}

std::vector<SmallCircuit> small_circuits_structural(const Word& w) {
  FactorIndex factors(w);

  // Conjugacy classes of primitive factors; a class can only carry circuits
  // if all of its conjugates occur in w.
  std::set<Word> candidates;
  std::set<std::string> seen;
  const std::string& bytes = w.bytes();
  for (std::size_t l = 1; l <= bytes.size(); ++l)
    for (std::size_t i = 0; i + l <= bytes.size(); ++i) {
      if (!seen.insert(bytes.substr(i, l)).second) continue;
      Word f = w.substr(i, l);
      if (is_primitive(f)) candidates.insert(canonical_rotation(f));
    }

  std::set<SmallCircuit> found;
  for (const Word& q : candidates) {
    auto rots = conjugate_set(q);
    bool all_present = std::all_of(
        rots.begin(), rots.end(),
        [&](const Word& r) { return factors.contains(r); });
    if (!all_present) continue;
    for (std::size_t l = q.size(); l + 1 <= w.size(); ++l) {
      bool ok = std::all_of(rots.begin(), rots.end(), [&](const Word& r) {
        return factors.contains(rational_power(r, l + 1));
      });
      // The edge words at level l are prefixes of those at level l+1, so
      // once a level fails every later level fails too.
      if (!ok) break;
      found.insert({q, l});
    }
  }
  return {found.begin(), found.end()};
}

CircuitBoundReport small_circuit_bound_check(const Word& w) {
  CircuitBoundReport rep;
  rep.count = small_circuits_graph(w).size();
  rep.bound = w.size() - alphabet_size(w);
  return rep;
}

std::vector<InjectionEntry> injection_map(const Word& w) {
  auto circuits = small_circuits_graph(w);
  std::set<SmallCircuit> available(circuits.begin(), circuits.end());
  std::set<SmallCircuit> used;

  std::vector<InjectionEntry> out;
  for (const ClassRecord& rec : build_classes(w)) {
    const std::size_t l = rec.canonical.size();
    for (std::size_t t = 1; t <= rec.members.size(); ++t) {
      SmallCircuit target{rec.canonical, t + l - 1};
      if (!available.count(target))
        throw FalsificationError("injection image C(" + target.q.str() + "," +
                               std::to_string(target.level) +
                               ") is not a small circuit of '" + w.str() +
                               "'");
      if (!used.insert(target).second)
        throw FalsificationError("injection collision at C(" + target.q.str() +
                               "," + std::to_string(target.level) + ")");
      out.push_back({rec.members[t - 1], std::move(target)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const InjectionEntry& a, const InjectionEntry& b) {
              return ShortlexLess{}(a.power, b.power);
            });
  return out;
}

std::string to_dot(const RauzyGraph& g, bool highlight_small_circuits) {
  std::set<Word> hot_vertices, hot_edges;
  if (highlight_small_circuits) {
    for (const Circuit& c : elementary_circuits(g, g.level)) {
      hot_vertices.insert(c.vertices.begin(), c.vertices.end());
      hot_edges.insert(c.edges.begin(), c.edges.end());
    }
  }
  std::ostringstream os;
  os << "digraph rauzy_l" << g.level << " {\n  rankdir=LR;\n";
  for (const Word& v : g.vertices) {
    os << "  \"" << v.str() << "\"";
    if (hot_vertices.count(v)) os << " [color=red]";
    os << ";\n";
  }
  for (const Word& e : g.edges) {
    os << "  \"" << edge_source(e).str() << "\" -> \"" << edge_target(e).str()
       << "\" [label=\"" << e.str() << "\"";
    if (hot_edges.count(e)) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace powfact
