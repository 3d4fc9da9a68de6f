#include "gainspec/gain_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

namespace gainspec {

namespace {

std::string dir_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

// Breadth-first frame of the component containing root; neighbors are
// visited in increasing order, so the frame is deterministic.
SpanningTreeFrame build_frame(const GainGraph& g, int root) {
  SpanningTreeFrame frame;
  frame.root = root;
  frame.parent.assign(g.n(), -2);  // -2 = outside the component
  frame.parent[root] = -1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [v, gain] : g.neighbors(u)) {
      (void)gain;
      if (frame.parent[v] != -2) continue;
      frame.parent[v] = u;
      frame.tree_edges.emplace_back(u, v);
      queue.push_back(v);
    }
  }
  auto in_tree = [&](int u, int v) {
    return frame.parent[v] == u || frame.parent[u] == v;
  };
  for (const GainEdge& e : g.edges()) {
    if (frame.parent[e.u] == -2 || frame.parent[e.v] == -2) continue;
    if (!in_tree(e.u, e.v)) frame.non_tree_edges.emplace_back(e.u, e.v);
  }
  // edges() is sorted, so the non-tree list is already lexicographic
  auto path_to_root = [&](int v) {
    Walk w;
    for (int x = v; x != -1; x = frame.parent[x]) w.push_back(x);
    return w;
  };
  for (auto [u, v] : frame.non_tree_edges) {
    Walk w = path_to_root(u);
    std::reverse(w.begin(), w.end());  // root .. u
    Walk down = path_to_root(v);       // v .. root
    w.insert(w.end(), down.begin(), down.end());
    frame.fundamental_walks.push_back(std::move(w));
  }
  return frame;
}

// Gain of the tree path root -> v for every component vertex.
std::vector<int> tree_path_gains(const GainGraph& g, const SpanningTreeFrame& frame) {
  const FiniteGroup& grp = *g.group();
  std::vector<int> w(g.n(), grp.identity());
  for (auto [p, c] : frame.tree_edges) w[c] = grp.mul(w[p], g.gain(p, c));
  return w;
}

}  // namespace

GainGraph::GainGraph(GroupPtr g, int n, std::vector<GainEdge> edges)
    : group_(std::move(g)), n_(n), edges_(std::move(edges)) {
  if (!group_) throw Error("gain graph needs a group");
  if (n_ < 0) throw Error("vertex count must be nonnegative");
  for (GainEdge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw Error("edge endpoint out of range");
    if (e.u == e.v)
      throw Error("loop at vertex " + std::to_string(e.u + 1) + " is not allowed");
    if (e.gain < 0 || e.gain >= group_->order()) throw Error("gain index out of range");
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      e.gain = group_->inv(e.gain);
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const GainEdge& a, const GainEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw Error("duplicate edge {" + std::to_string(edges_[i].u + 1) + "," +
                  std::to_string(edges_[i].v + 1) + "}");
  adj_.assign(n_, {});
  for (const GainEdge& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.gain);
    adj_[e.v].emplace_back(e.u, group_->inv(e.gain));
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool GainGraph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, 0));
  return it != a.end() && it->first == v;
}

int GainGraph::gain(int u, int v) const {
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, 0));
  if (it == a.end() || it->first != v)
    throw Error("vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1) +
                " are not adjacent");
  return it->second;
}

bool GainGraph::underlying_equal(const GainGraph& o) const {
  if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v) return false;
  return true;
}

GainGraph parse_gain_graph(std::istream& in, const std::string& base_dir) {
  GroupPtr group;
  int n = -1;
  std::vector<GainEdge> edges;
  std::vector<std::pair<int, int>> seen_pairs;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "group") {
      if (group) fail("repeated group line");
      if (tok.size() != 3) fail("expected: group (cyclic <m> | symmetric <n> | table <path>)");
      if (tok[1] == "cyclic" || tok[1] == "symmetric") {
        int k = 0;
        try {
          size_t used = 0;
          k = std::stoi(tok[2], &used);
          if (used != tok[2].size()) throw std::invalid_argument("");
        } catch (...) {
          fail("bad group order '" + tok[2] + "'");
        }
        try {
          group = tok[1] == "cyclic" ? build_cyclic(k) : build_symmetric(k);
        } catch (const Error& e) {
          fail(e.what());
        }
      } else if (tok[1] == "table") {
        std::string path = tok[2];
        if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
        try {
          group = load_group_table(path);
        } catch (const Error& e) {
          fail(e.what());
        }
      } else {
        fail("unknown group kind '" + tok[1] + "'");
      }
    } else if (tok[0] == "vertices") {
      if (!group) fail("vertices line before the group line");
      if (n >= 0) fail("repeated vertices line");
      if (tok.size() != 2) fail("expected: vertices <n>");
      try {
        size_t used = 0;
        n = std::stoi(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument("");
      } catch (...) {
        fail("bad vertex count '" + tok[1] + "'");
      }
      if (n < 1) fail("vertex count must be >= 1");
    } else if (tok[0] == "edge") {
      if (n < 0) fail("edge line before the vertices line");
      if (tok.size() != 3 && tok.size() != 4) fail("expected: edge <u> <v> [<gain>]");
      int uv[2];
      for (int i = 0; i < 2; ++i) {
        try {
          size_t used = 0;
          uv[i] = std::stoi(tok[1 + i], &used);
          if (used != tok[1 + i].size()) throw std::invalid_argument("");
        } catch (...) {
          fail("bad vertex '" + tok[1 + i] + "'");
        }
        if (uv[i] < 1 || uv[i] > n)
          fail("vertex " + tok[1 + i] + " out of range 1.." + std::to_string(n));
      }
      if (uv[0] == uv[1]) fail("loop at vertex " + std::to_string(uv[0]));
      int gain = group->identity();
      if (tok.size() == 4) {
        try {
          gain = group->parse_element(tok[3]);
        } catch (const Error& e) {
          fail(e.what());
        }
      }
      std::pair<int, int> key{std::min(uv[0], uv[1]), std::max(uv[0], uv[1])};
      if (std::find(seen_pairs.begin(), seen_pairs.end(), key) != seen_pairs.end())
        fail("duplicate edge {" + std::to_string(key.first) + "," +
             std::to_string(key.second) + "}");
      seen_pairs.push_back(key);
      edges.push_back({uv[0] - 1, uv[1] - 1, gain});
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  ++lineno;
  if (!group) fail("missing group line");
  if (n < 0) fail("missing vertices line");
  return GainGraph(group, n, std::move(edges));
}

GainGraph load_gain_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open gain graph file '" + path + "'");
  return parse_gain_graph(in, dir_of(path));
}

std::string format_gain_graph(const GainGraph& g, const std::vector<std::string>& comments) {
  const FiniteGroup& grp = *g.group();
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << "\n";
  switch (grp.kind()) {
    case GroupKind::cyclic:
      out << "group cyclic " << grp.order() << "\n";
      break;
    case GroupKind::symmetric:
      out << "group symmetric " << grp.kind_param() << "\n";
      break;
    case GroupKind::table:
      throw Error("cannot render a table-built group back into text");
  }
  out << "vertices " << g.n() << "\n";
  for (const GainEdge& e : g.edges()) {
    out << "edge " << e.u + 1 << " " << e.v + 1;
    if (e.gain != grp.identity()) out << " " << grp.name(e.gain);
    out << "\n";
  }
  return out.str();
}

int gain_of_walk(const GainGraph& g, const Walk& w) {
  if (w.empty()) throw Error("walk must contain at least one vertex");
  const FiniteGroup& grp = *g.group();
  int acc = grp.identity();
  for (size_t i = 0; i + 1 < w.size(); ++i) acc = grp.mul(acc, g.gain(w[i], w[i + 1]));
  return acc;
}

GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& f) {
  check_same_group(*g.group(), *f.group, "switching");
  if (int(f.values.size()) != g.n())
    throw Error("switching function has " + std::to_string(f.values.size()) +
                " values for " + std::to_string(g.n()) + " vertices");
  const FiniteGroup& grp = *g.group();
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges)
    e.gain = grp.mul(grp.mul(grp.inv(f.values[e.u]), e.gain), f.values[e.v]);
  return GainGraph(g.group(), g.n(), std::move(edges));
}

TreeNormalization tree_normalize(const GainGraph& g, int root) {
  if (root < 0 || root >= g.n()) throw Error("root vertex out of range");
  if (components(g).size() != 1) throw Error("tree normalization needs a connected graph");
  SpanningTreeFrame frame = build_frame(g, root);
  std::vector<int> w = tree_path_gains(g, frame);
  const FiniteGroup& grp = *g.group();
  SwitchingFunction f{g.group(), {}};
  f.values.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) f.values.push_back(grp.inv(w[v]));
  return {apply_switching(g, f), std::move(f), std::move(frame)};
}

std::vector<int> fundamental_gains(const GainGraph& g, const SpanningTreeFrame& frame) {
  std::vector<int> gains;
  gains.reserve(frame.fundamental_walks.size());
  for (const Walk& w : frame.fundamental_walks) gains.push_back(gain_of_walk(g, w));
  return gains;
}

std::optional<SwitchingFunction> switching_equivalent(const GainGraph& a,
                                                      const GainGraph& b) {
  check_same_group(*a.group(), *b.group(), "switching equivalence");
  if (!a.underlying_equal(b)) return std::nullopt;
  const FiniteGroup& grp = *a.group();
  SwitchingFunction f{a.group(), std::vector<int>(a.n(), grp.identity())};
  for (const auto& comp : components(a)) {
    SpanningTreeFrame frame = build_frame(a, comp.front());
    std::vector<int> ta = fundamental_gains(a, frame);
    std::vector<int> tb = fundamental_gains(b, frame);
    std::optional<int> x = simultaneously_conjugate(grp, ta, tb);
    if (!x) return std::nullopt;
    // Compose the two normalizing switchings around the conjugator:
    // f = (inverse tree gains of a) * x * (tree gains of b).
    std::vector<int> wa = tree_path_gains(a, frame);
    std::vector<int> wb = tree_path_gains(b, frame);
    for (int v : comp) f.values[v] = grp.mul(grp.mul(grp.inv(wa[v]), *x), wb[v]);
  }
  for (const GainEdge& e : a.edges()) {
    int switched = grp.mul(grp.mul(grp.inv(f.values[e.u]), e.gain), f.values[e.v]);
    if (switched != b.gain(e.u, e.v))
      throw Error("internal error: switching witness failed edge verification");
  }
  return f;
}

std::optional<SwitchingIsomorphism> switching_isomorphic(const GainGraph& a,
                                                         const GainGraph& b, int max_n) {
  check_same_group(*a.group(), *b.group(), "switching isomorphism");
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  if (a.n() > max_n)
    throw GuardError("isomorphism search is capped at " + std::to_string(max_n) +
                     " vertices (got " + std::to_string(a.n()) +
                     "); raise the cap to override");
  int n = a.n();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  std::function<std::optional<SwitchingIsomorphism>(int)> rec =
      [&](int d) -> std::optional<SwitchingIsomorphism> {
    if (d == n) {
      // phi is an underlying-graph isomorphism; pull b's gains back to a's
      // vertex labels and test switching equivalence.
      std::vector<GainEdge> pulled;
      pulled.reserve(a.m());
      for (const GainEdge& e : a.edges())
        pulled.push_back({e.u, e.v, b.gain(phi[e.u], phi[e.v])});
      GainGraph h(a.group(), n, std::move(pulled));
      std::optional<SwitchingFunction> f = switching_equivalent(a, h);
      if (!f) return std::nullopt;
      // Validate through the permuted-switching matrix identity
      // (PF)* A_a (PF) == A_b  with (PF) carrying f(u) at (u, phi(u)).
      GroupAlgebraMatrix pf(a.group(), n, n);
      for (int u = 0; u < n; ++u)
        pf.at(u, phi[u]) = GroupAlgebraElement::basis(a.group(), f->values[u]);
      if (pf.star() * adjacency_matrix(a) * pf != adjacency_matrix(b))
        throw Error("internal error: switching isomorphism failed matrix verification");
      return SwitchingIsomorphism{phi, std::move(*f)};
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || da[d] != db[c]) continue;
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) ok = a.has_edge(i, d) == b.has_edge(phi[i], c);
      if (!ok) continue;
      phi[d] = c;
      used[c] = true;
      auto res = rec(d + 1);
      if (res) return res;
      used[c] = false;
      phi[d] = -1;
    }
    return std::nullopt;
  };
  return rec(0);
}

bool is_balanced(const GainGraph& g) {
  const FiniteGroup& grp = *g.group();
  for (const auto& comp : components(g)) {
    SpanningTreeFrame frame = build_frame(g, comp.front());
    for (int t : fundamental_gains(g, frame))
      if (t != grp.identity()) return false;
  }
  return true;
}

Int count_switching_classes(const GainGraph& g) {
  if (components(g).size() != 1)
    throw Error("switching classes are counted for connected graphs only");
  int k = g.m() - g.n() + 1;
  return count_simultaneous_conjugacy_classes(*g.group(), k);
}

std::vector<std::vector<int>> components(const GainGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n(), false);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (auto [v, gain] : g.neighbors(u)) {
        (void)gain;
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

GroupAlgebraMatrix adjacency_matrix(const GainGraph& g) {
  GroupAlgebraMatrix a(g.group(), g.n(), g.n());
  for (const GainEdge& e : g.edges()) {
    a.at(e.u, e.v).coeff(e.gain) = 1;
    a.at(e.v, e.u).coeff(g.group()->inv(e.gain)) = 1;
  }
  return a;
}

}  // namespace gainspec
