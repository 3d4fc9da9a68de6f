#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainspec/algebra.hpp"

namespace gainspec {

/// One undirected edge carrying the gain of the stored orientation u -> v
/// (canonicalized to u < v); the reverse orientation carries the inverse.
struct GainEdge {
  int u = 0, v = 0, gain = 0;
  friend bool operator==(const GainEdge&, const GainEdge&) = default;
};

/// A simple undirected graph whose edge orientations carry elements of a
/// finite group.  Vertices are 0-based indices; loops and multi-edges are
/// rejected at construction.
class GainGraph {
 public:
  GainGraph(GroupPtr g, int n, std::vector<GainEdge> edges);

  int n() const { return n_; }
  int m() const { return int(edges_.size()); }
  const GroupPtr& group() const { return group_; }
  /// Edges sorted by (u, v), already canonicalized to u < v.
  const std::vector<GainEdge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  /// psi(u, v); throws Error when u and v are not adjacent.
  int gain(int u, int v) const;
  int degree(int v) const { return int(adj_[v].size()); }
  /// Neighbors of u as (v, psi(u, v)), sorted by v.
  const std::vector<std::pair<int, int>>& neighbors(int u) const { return adj_[u]; }
  /// Same vertex count and same edge set, gains ignored.
  bool underlying_equal(const GainGraph& o) const;

 private:
  GroupPtr group_;
  int n_ = 0;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Gain-graph text format: a `group` line (cyclic <m> | symmetric <n> |
/// table <path>), a `vertices <n>` line, then `edge <u> <v> [<literal>]`
/// lines with 1-based endpoints and an optional gain literal (defaults to
/// the identity).  `#` starts a comment.  Table paths are resolved relative
/// to base_dir.
GainGraph parse_gain_graph(std::istream& in, const std::string& base_dir = ".");
GainGraph load_gain_graph(const std::string& path);

/// Renders a graph back into the text format (cyclic and symmetric groups
/// only).  Extra comment lines may be prepended.
std::string format_gain_graph(const GainGraph& g,
                              const std::vector<std::string>& comments = {});

/// A group element per vertex; rescales gains to f(u)^-1 psi(u,v) f(v).
struct SwitchingFunction {
  GroupPtr group;
  std::vector<int> values;
};

/// A walk as its vertex sequence; consecutive vertices must be adjacent.
using Walk = std::vector<int>;

/// Product of the gains along the walk, multiplied left to right.
int gain_of_walk(const GainGraph& g, const Walk& w);

GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& f);

/// Breadth-first spanning tree data of a connected graph: the tree edges in
/// discovery order, the non-tree edges in lexicographic order, and for each
/// non-tree edge {u, v} (u < v) the closed walk root..u, v..root through the
/// tree.  Graphs with the same underlying graph share the same frame.
struct SpanningTreeFrame {
  int root = 0;
  std::vector<int> parent;                         // -1 at the root
  std::vector<std::pair<int, int>> tree_edges;     // (parent, child)
  std::vector<std::pair<int, int>> non_tree_edges; // (u, v), u < v
  std::vector<Walk> fundamental_walks;
};

/// Result of switching all spanning-tree gains to the identity.
struct TreeNormalization {
  GainGraph graph;
  SwitchingFunction switching;
  SpanningTreeFrame frame;
};

/// Switches the graph so that every spanning-tree edge carries the identity;
/// the non-tree gains of the result are the fundamental closed-walk gains at
/// the root.  Requires a connected graph.
TreeNormalization tree_normalize(const GainGraph& g, int root = 0);

/// Gains of the frame's fundamental closed walks, evaluated in g.  The frame
/// may come from any graph with the same underlying graph.
std::vector<int> fundamental_gains(const GainGraph& g, const SpanningTreeFrame& frame);

/// A switching f with psi_b = f(u)^-1 psi_a(u,v) f(v) if one exists.  The two
/// graphs must share the group; distinct underlying graphs are simply not
/// equivalent.  Disconnected graphs are decided component by component.
std::optional<SwitchingFunction> switching_equivalent(const GainGraph& a,
                                                      const GainGraph& b);

/// A vertex bijection phi plus a switching of a, with
/// psi_b(phi(u), phi(v)) = f(u)^-1 psi_a(u,v) f(v).
struct SwitchingIsomorphism {
  std::vector<int> phi;
  SwitchingFunction switching;
};

/// Backtracking search over underlying-graph isomorphisms (lexicographically
/// least phi first), testing switching equivalence of the pulled-back gains.
/// Guarded at max_n vertices; raise the cap explicitly for larger graphs.
std::optional<SwitchingIsomorphism> switching_isomorphic(const GainGraph& a,
                                                         const GainGraph& b,
                                                         int max_n = 10);

/// Whether the graph switches to the all-identity gain (componentwise).
bool is_balanced(const GainGraph& g);

/// Number of switching classes over the underlying graph of g (gains are
/// ignored): orbits of G^(m-n+1) under simultaneous conjugation.  Connected
/// graphs only.
Int count_switching_classes(const GainGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const GainGraph& g);

/// n-by-n group-ring matrix with psi(u,v) at (u,v); satisfies A.star() == A.
GroupAlgebraMatrix adjacency_matrix(const GainGraph& g);

}  // namespace gainspec
