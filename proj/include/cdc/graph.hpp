#pragma once
// Simple undirected graphs with stable integer vertex ids, plus the
// structural predicates the pipeline depends on: degree parity, bridge
// detection, connectivity, induced subgraphs, and edge-list / DOT I/O.
//
// Graphs are treated as immutable once built; every operation here is a
// pure function over const references. Neighbor lists are kept sorted
// ascending so all traversals are deterministic.

#include <compare>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdc {

struct parse_error : std::runtime_error {
  int line = 0;
  parse_error(const std::string& msg, int line_no)
      : std::runtime_error(msg), line(line_no) {}
};

// Misuse of an operation (bad arguments, violated preconditions).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A contract the pipeline itself guarantees was broken; indicates a bug
// or a genuine counterexample to one of the audited claims.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Undirected edge; endpoints normalized so a < b.
struct Edge {
  int a = 0;
  int b = 0;
  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw domain_error("loop edge " + std::to_string(u));
  }
  auto operator<=>(const Edge&) const = default;
  std::string str() const { return std::to_string(a) + "-" + std::to_string(b); }
};

class Graph {
 public:
  Graph() = default;

  void add_vertex(int v);
  // Throws domain_error on loops and duplicate edges.
  void add_edge(int u, int v);

  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

  // Sorted ascending; throws domain_error for unknown vertices.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& vertices() const { return verts_; }  // sorted
  const std::vector<Edge>& edges() const { return edges_; }    // sorted

  bool operator==(const Graph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_;
  }

 private:
  std::vector<int> verts_;               // sorted
  std::vector<Edge> edges_;              // sorted
  std::map<int, std::vector<int>> adj_;  // vertex -> sorted neighbors
};

// Edge-list text: one "u v" pair per line, '#' comments, blank lines
// ignored. Rejects loops and duplicates with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Canonical serialization: edges sorted lexicographically.
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

struct ParityPartition {
  std::vector<int> odd;
  std::vector<int> even;  // nonzero even degree
  std::vector<int> isolated;
};
ParityPartition parity_partition(const Graph& g);

// Cut edges via one DFS with low-link values; deterministic given the
// sorted adjacency.
std::vector<Edge> find_bridges(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

struct InputVerdict {
  enum class Reason { accepted, too_small, disconnected, has_bridge, low_degree };
  bool ok = false;
  Reason reason = Reason::accepted;
  Edge witness_edge;       // set when reason == has_bridge
  int witness_vertex = -1; // set when reason == low_degree
  std::string message() const;
};

// Accepts connected bridgeless graphs with >= 3 vertices and min degree >= 2.
InputVerdict is_valid_input(const Graph& g);

// Graph whose edge set is `es` and whose vertices are the endpoints.
// Throws domain_error if an edge is not in g.
Graph induced_subgraph(const Graph& g, const std::vector<Edge>& es);

}  // namespace cdc
