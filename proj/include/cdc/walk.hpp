#pragma once
// Walks over a Graph: vertex sequences with the classification lattice
// walk > trail > {circuit, path} > cycle, plus the doubled kinds
// (fork, segment, double-cycle) and per-edge traversal counts.
//
// Closed walks store the start vertex twice (front == back). Canonical
// form is the lexicographically smallest rotation of the cyclic sequence,
// taken over both directions; open walks canonicalize to the smaller of
// the two directions. Equality and ordering of walks always go through
// canonical form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

enum class WalkKind {
  walk,
  trail,
  circuit,
  path,
  cycle,
  fork,
  segment,
  double_cycle,
  branch,
};
const char* to_string(WalkKind k);

struct Walk {
  std::vector<int> verts;
  bool closed = false;
  std::optional<WalkKind> kind;  // set by classification, not construction

  Walk() = default;
  Walk(std::vector<int> vs, bool cl) : verts(std::move(vs)), closed(cl) {}

  int edge_length() const { return verts.empty() ? 0 : static_cast<int>(verts.size()) - 1; }
  bool valid_in(const Graph& g) const;
  std::vector<Edge> edge_seq() const;  // with multiplicity, traversal order
  std::string str() const;
};

// Cycle from a vertex list without the repeated endpoint: {0,1,2} -> 0 1 2 0.
Walk cycle_walk(std::vector<int> cyc);
// Out-and-back closed walk of a simple path: {1,2,3} -> 1 2 3 2 1.
Walk segment_walk(const std::vector<int>& path);
Walk open_walk(std::vector<int> path);

using CoverageMap = std::map<Edge, int>;

CoverageMap walk_coverage(const Walk& w);
void add_coverage(CoverageMap& acc, const Walk& w, int multiplicity = 1);
// True iff cov assigns exactly `value` to every edge of g and nothing else.
bool coverage_is_constant(const Graph& g, const CoverageMap& cov, int value);

Walk canonical(const Walk& w);
bool walk_equal(const Walk& x, const Walk& y);
// Strict weak order on canonical forms: by edge length, then sequence.
bool walk_less(const Walk& x, const Walk& y);
void sort_walks(std::vector<Walk>& ws);

// Occurrences of each vertex; cyclic for closed walks (seam not counted twice).
std::map<int, int> vertex_multiplicity(const Walk& w);

// Most specific kind. Throws domain_error when consecutive vertices are
// not adjacent in g. Cycles require length >= 3.
WalkKind classify_walk(const Graph& g, const Walk& w);

struct ForkRoles {
  std::vector<int> ending;       // passed once
  std::vector<int> inner;        // passed exactly twice
  std::vector<int> bifurcation;  // passed more than twice
};
// Pre: w classifies as fork or segment (double-cycles are rejected).
ForkRoles fork_vertex_roles(const Walk& w);

// Underlying simple path of a segment, oriented to start at the smaller
// ending vertex.
std::vector<int> segment_path(const Walk& s);
std::vector<int> segment_endings(const Walk& s);

}  // namespace cdc
