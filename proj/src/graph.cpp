#include "cdc/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cdc {

void Graph::add_vertex(int v) {
  if (v < 0) throw domain_error("negative vertex id " + std::to_string(v));
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it != verts_.end() && *it == v) return;
  verts_.insert(it, v);
  adj_.emplace(v, std::vector<int>{});
}

void Graph::add_edge(int u, int v) {
  Edge e(u, v);  // rejects loops
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw domain_error("duplicate edge " + e.str());
  add_vertex(u);
  add_vertex(v);
  edges_.insert(it, e);
  auto& nu = adj_[u];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

bool Graph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  Edge e(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw domain_error("unknown vertex " + std::to_string(v));
  return it->second;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Graph parse_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) throw parse_error("expected two integers on line " + std::to_string(line_no), line_no);
    std::string rest;
    if (ls >> rest) throw parse_error("trailing tokens on line " + std::to_string(line_no), line_no);
    if (u < 0 || v < 0) throw parse_error("negative vertex id on line " + std::to_string(line_no), line_no);
    if (u == v) throw parse_error("loop edge on line " + std::to_string(line_no), line_no);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("duplicate edge on line " + std::to_string(line_no), line_no);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.a << " " << e.b << "\n";
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (const Edge& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

ParityPartition parity_partition(const Graph& g) {
  ParityPartition p;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    if (d == 0)
      p.isolated.push_back(v);
    else if (d % 2 == 1)
      p.odd.push_back(v);
    else
      p.even.push_back(v);
  }
  return p;
}

std::vector<Edge> find_bridges(const Graph& g) {
  std::map<int, int> disc, low;
  std::vector<Edge> bridges;
  int timer = 0;

  // Iterative DFS; parent tracked per frame so the tree edge back to the
  // parent is skipped exactly once (simple graph, no parallel edges).
  struct Frame {
    int v;
    int parent;
    size_t next = 0;
  };
  for (int root : g.vertices()) {
    if (disc.count(root)) continue;
    std::vector<Frame> stack;
    stack.push_back({root, -1});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int u = nb[f.next++];
        if (u == f.parent) continue;
        if (disc.count(u)) {
          low[f.v] = std::min(low[f.v], disc[u]);
        } else {
          disc[u] = low[u] = timer++;
          stack.push_back({u, f.v});
        }
      } else {
        int v = f.v, parent = f.parent;
        stack.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) bridges.emplace_back(parent, v);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::map<int, bool> seen;
  for (int root : g.vertices()) {
    if (seen[root]) continue;
    std::vector<int> comp, stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_components(g).size() == 1;
}

std::string InputVerdict::message() const {
  switch (reason) {
    case Reason::accepted: return "accepted";
    case Reason::too_small: return "fewer than 3 vertices";
    case Reason::disconnected: return "not connected";
    case Reason::has_bridge: return "bridge " + witness_edge.str();
    case Reason::low_degree:
      return "vertex " + std::to_string(witness_vertex) + " has degree < 2";
  }
  return "";
}

InputVerdict is_valid_input(const Graph& g) {
  InputVerdict v;
  if (g.vertex_count() < 3) {
    v.reason = InputVerdict::Reason::too_small;
    return v;
  }
  if (!is_connected(g)) {
    v.reason = InputVerdict::Reason::disconnected;
    return v;
  }
  auto bridges = find_bridges(g);
  if (!bridges.empty()) {
    v.reason = InputVerdict::Reason::has_bridge;
    v.witness_edge = bridges.front();
    return v;
  }
  for (int u : g.vertices()) {
    if (g.degree(u) < 2) {  // unreachable for connected bridgeless n>=3, kept as a guard
      v.reason = InputVerdict::Reason::low_degree;
      v.witness_vertex = u;
      return v;
    }
  }
  v.ok = true;
  return v;
}

Graph induced_subgraph(const Graph& g, const std::vector<Edge>& es) {
  Graph sub;
  for (const Edge& e : es) {
    if (!g.has_edge(e)) throw domain_error("edge " + e.str() + " not in graph");
    if (!sub.has_edge(e)) sub.add_edge(e.a, e.b);
  }
  return sub;
}

}  // namespace cdc
