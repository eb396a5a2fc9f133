#include "cdc/walk.hpp"

#include <algorithm>
#include <sstream>

namespace cdc {

const char* to_string(WalkKind k) {
  switch (k) {
    case WalkKind::walk: return "walk";
    case WalkKind::trail: return "trail";
    case WalkKind::circuit: return "circuit";
    case WalkKind::path: return "path";
    case WalkKind::cycle: return "cycle";
    case WalkKind::fork: return "fork";
    case WalkKind::segment: return "segment";
    case WalkKind::double_cycle: return "double-cycle";
    case WalkKind::branch: return "branch";
  }
  return "?";
}

bool Walk::valid_in(const Graph& g) const {
  if (verts.empty()) return false;
  for (int v : verts)
    if (!g.has_vertex(v)) return false;
  for (size_t i = 0; i + 1 < verts.size(); ++i)
    if (!g.has_edge(verts[i], verts[i + 1])) return false;
  if (closed && verts.size() >= 2 && verts.front() != verts.back()) return false;
  return true;
}

std::vector<Edge> Walk::edge_seq() const {
  std::vector<Edge> es;
  for (size_t i = 0; i + 1 < verts.size(); ++i) es.emplace_back(verts[i], verts[i + 1]);
  return es;
}

std::string Walk::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) out << " ";
    out << verts[i];
  }
  return out.str();
}

Walk cycle_walk(std::vector<int> cyc) {
  if (cyc.empty()) throw domain_error("empty cycle");
  cyc.push_back(cyc.front());
  return Walk(std::move(cyc), true);
}

Walk segment_walk(const std::vector<int>& path) {
  if (path.size() < 2) throw domain_error("segment path needs at least one edge");
  std::vector<int> vs(path);
  for (auto it = path.rbegin() + 1; it != path.rend(); ++it) vs.push_back(*it);
  return Walk(std::move(vs), true);
}

Walk open_walk(std::vector<int> path) { return Walk(std::move(path), false); }

CoverageMap walk_coverage(const Walk& w) {
  CoverageMap cov;
  add_coverage(cov, w);
  return cov;
}

void add_coverage(CoverageMap& acc, const Walk& w, int multiplicity) {
  for (const Edge& e : w.edge_seq()) acc[e] += multiplicity;
}

bool coverage_is_constant(const Graph& g, const CoverageMap& cov, int value) {
  for (const Edge& e : g.edges()) {
    auto it = cov.find(e);
    if ((it == cov.end() ? 0 : it->second) != value) return false;
  }
  for (const auto& [e, c] : cov)
    if (c != 0 && !g.has_edge(e)) return false;
  return true;
}

namespace {

std::vector<int> min_rotation_of(const std::vector<int>& cyc) {
  size_t n = cyc.size();
  std::vector<int> best;
  for (size_t s = 0; s < n; ++s) {
    std::vector<int> rot(n);
    for (size_t i = 0; i < n; ++i) rot[i] = cyc[(s + i) % n];
    if (best.empty() || rot < best) best = std::move(rot);
  }
  return best;
}

}  // namespace

Walk canonical(const Walk& w) {
  Walk out = w;
  out.kind = w.kind;
  if (!w.closed || w.verts.size() < 2) {
    if (!w.closed) {
      std::vector<int> rev(w.verts.rbegin(), w.verts.rend());
      if (rev < out.verts) out.verts = std::move(rev);
    }
    return out;
  }
  std::vector<int> cyc(w.verts.begin(), w.verts.end() - 1);
  std::vector<int> fwd = min_rotation_of(cyc);
  std::reverse(cyc.begin(), cyc.end());
  std::vector<int> bwd = min_rotation_of(cyc);
  std::vector<int>& best = fwd <= bwd ? fwd : bwd;
  best.push_back(best.front());
  out.verts = std::move(best);
  return out;
}

bool walk_equal(const Walk& x, const Walk& y) {
  if (x.closed != y.closed) return false;
  return canonical(x).verts == canonical(y).verts;
}

bool walk_less(const Walk& x, const Walk& y) {
  Walk cx = canonical(x), cy = canonical(y);
  if (cx.verts.size() != cy.verts.size()) return cx.verts.size() < cy.verts.size();
  if (cx.verts != cy.verts) return cx.verts < cy.verts;
  return cx.closed < cy.closed;
}

void sort_walks(std::vector<Walk>& ws) {
  for (Walk& w : ws) w = canonical(w);
  std::sort(ws.begin(), ws.end(), walk_less);
}

std::map<int, int> vertex_multiplicity(const Walk& w) {
  std::map<int, int> m;
  size_t n = w.verts.size();
  if (w.closed && n >= 2) n -= 1;  // the seam vertex counts once
  for (size_t i = 0; i < n; ++i) m[w.verts[i]] += 1;
  return m;
}

WalkKind classify_walk(const Graph& g, const Walk& w) {
  if (w.verts.empty()) throw domain_error("empty walk");
  for (size_t i = 0; i + 1 < w.verts.size(); ++i)
    if (!g.has_edge(w.verts[i], w.verts[i + 1]))
      throw domain_error("walk steps over non-edge " + std::to_string(w.verts[i]) + "-" +
                         std::to_string(w.verts[i + 1]));
  if (w.closed && w.verts.size() >= 2 && w.verts.front() != w.verts.back())
    throw domain_error("closed walk must end at its start vertex");

  CoverageMap cov = walk_coverage(w);
  bool edge_simple = true, all_doubled = !cov.empty();
  int max_mult = 0;
  for (const auto& [e, c] : cov) {
    max_mult = std::max(max_mult, c);
    if (c != 1) edge_simple = false;
    if (c != 2) all_doubled = false;
  }
  std::map<int, int> vm = vertex_multiplicity(w);
  bool vertex_simple = true;
  for (const auto& [v, c] : vm)
    if (c > 1) vertex_simple = false;

  if (edge_simple || cov.empty()) {
    if (w.closed && w.edge_length() >= 2) {
      if (vertex_simple && w.edge_length() >= 3) return WalkKind::cycle;
      return WalkKind::circuit;
    }
    if (vertex_simple) return WalkKind::path;
    return WalkKind::trail;
  }
  if (w.closed && all_doubled) {
    // Edges all passed exactly twice: double-cycle beats segment beats fork.
    std::vector<Edge> support;
    for (const auto& [e, c] : cov) support.push_back(e);
    Graph ind = induced_subgraph(g, support);
    bool single_cycle = is_connected(ind) && ind.edge_count() >= 3;
    if (single_cycle)
      for (int v : ind.vertices())
        if (ind.degree(v) != 2) single_cycle = false;
    if (single_cycle) return WalkKind::double_cycle;
    bool seg = true;
    for (const auto& [v, c] : vm)
      if (c > 2) seg = false;
    return seg ? WalkKind::segment : WalkKind::fork;
  }
  return WalkKind::walk;
}

ForkRoles fork_vertex_roles(const Walk& w) {
  CoverageMap cov = walk_coverage(w);
  if (!w.closed) throw domain_error("fork roles need a closed walk");
  for (const auto& [e, c] : cov)
    if (c != 2) throw domain_error("fork roles need every edge passed exactly twice");
  ForkRoles roles;
  for (const auto& [v, c] : vertex_multiplicity(w)) {
    if (c == 1)
      roles.ending.push_back(v);
    else if (c == 2)
      roles.inner.push_back(v);
    else
      roles.bifurcation.push_back(v);
  }
  return roles;
}

std::vector<int> segment_endings(const Walk& s) {
  ForkRoles roles = fork_vertex_roles(s);
  if (roles.ending.size() != 2 || !roles.bifurcation.empty())
    throw domain_error("walk is not a segment");
  return roles.ending;
}

std::vector<int> segment_path(const Walk& s) {
  std::vector<int> ends = segment_endings(s);
  std::vector<int> cyc(s.verts.begin(), s.verts.end() - 1);
  size_t n = cyc.size();
  size_t start = 0;
  while (start < n && cyc[start] != ends[0]) ++start;
  if (start == n) throw domain_error("ending vertex missing from segment walk");
  std::vector<int> path;
  for (size_t i = 0; i <= n / 2; ++i) path.push_back(cyc[(start + i) % n]);
  // the second half must retrace the first
  for (size_t i = 0; i < n / 2; ++i)
    if (cyc[(start + n / 2 + 1 + i) % n] != path[n / 2 - 1 - i])
      throw domain_error("segment walk does not retrace its path");
  return path;
}

}  // namespace cdc
