#include "scx/skeleton_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "scx/complex_ops.hpp"

namespace scx {

SkeletonGraph::SkeletonGraph(std::size_t n, const std::vector<Edge>& edges)
    : rows_(n, boost::dynamic_bitset<>(n)), neighbors_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::kOutOfRange, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kMalformedFace, "self-loop in graph");
    if (rows_[u].test(v)) continue;
    rows_[u].set(v);
    rows_[v].set(u);
    ++num_edges_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w = rows_[v].find_first(); w != boost::dynamic_bitset<>::npos;
         w = rows_[v].find_next(w)) {
      neighbors_[v].push_back(static_cast<VertexId>(w));
    }
  }
}

std::vector<SkeletonGraph::Edge> SkeletonGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < neighbors_.size(); ++u) {
    for (VertexId v : neighbors_[u]) {
      if (static_cast<VertexId>(u) < v) out.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return out;
}

bool SkeletonGraph::is_complete() const {
  const std::size_t n = num_vertices();
  return num_edges_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::vector<VertexId>> SkeletonGraph::components() const {
  const std::size_t n = num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<VertexId> queue{static_cast<VertexId>(s)};
    comp[s] = id;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (VertexId w : neighbors_[v]) {
        if (comp[w] < 0) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool SkeletonGraph::is_connected() const { return components().size() <= 1; }

bool SkeletonGraph::is_connected_on(const boost::dynamic_bitset<>& keep) const {
  auto start = keep.find_first();
  if (start == boost::dynamic_bitset<>::npos) return true;
  boost::dynamic_bitset<> seen(num_vertices());
  std::deque<VertexId> queue{static_cast<VertexId>(start)};
  seen.set(start);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : neighbors_[v]) {
      if (keep.test(w) && !seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    }
  }
  return seen == keep;
}

SkeletonGraph skeleton(const SimplicialComplex& c) {
  std::vector<SkeletonGraph::Edge> edges;
  for (const Face& e : c.faces(2)) edges.emplace_back(e[0], e[1]);
  return SkeletonGraph(c.num_vertices(), edges);
}

VertexSet neighborhood(const SimplicialComplex& c, VertexId x) {
  if (x < 0 || static_cast<std::size_t>(x) >= c.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex id " + std::to_string(x));
  }
  std::vector<VertexId> out{x};
  for (const Face& f : c.facets()) {
    if (f.contains(x)) out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Face::from_sorted(std::move(out));
}

bool is_connected(const SimplicialComplex& c) { return skeleton(c).is_connected(); }

namespace {

// Unit-capacity network where vertex v becomes in(v) = 2v -> out(v) = 2v+1,
// so that vertex-disjointness turns into arc-disjointness.
class SplitNetwork {
 public:
  SplitNetwork(const SkeletonGraph& g, VertexId s, VertexId t)
      : adj_(2 * g.num_vertices()), source_(out(s)), sink_(in(t)) {
    const auto n = static_cast<VertexId>(g.num_vertices());
    for (VertexId v = 0; v < n; ++v) {
      if (v != s && v != t) add_arc(in(v), out(v));
      for (VertexId w : g.neighbors(v)) add_arc(out(v), in(w));
    }
  }

  // Augments along shortest paths, lowest ids explored first, until no path
  // remains or the flow reaches `limit` (negative means unlimited).
  int run(int limit) {
    while (limit < 0 || flow_ < limit) {
      if (!augment()) break;
      ++flow_;
    }
    return flow_;
  }

  std::vector<std::vector<VertexId>> paths() const {
    std::vector<std::vector<VertexId>> out_paths;
    for (const Arc& a : adj_[source_]) {
      if (!a.forward || a.cap != 0) continue;
      std::vector<VertexId> path{vertex_of(source_)};
      int node = a.to;
      while (node != sink_) {
        // node is in(w); step to out(w), then along its unique flow arc.
        path.push_back(vertex_of(node));
        const int o = node + 1;
        int next = -1;
        for (const Arc& b : adj_[o]) {
          if (b.forward && b.cap == 0) {
            next = b.to;
            break;
          }
        }
        node = next;
      }
      path.push_back(vertex_of(sink_));
      out_paths.push_back(std::move(path));
    }
    return out_paths;
  }

  // Valid after run() stopped below its limit.
  std::vector<VertexId> min_cut() const {
    std::vector<char> seen = reachable();
    std::vector<VertexId> cut;
    for (std::size_t node = 0; node < adj_.size(); node += 2) {
      if (seen[node] && !seen[node + 1]) cut.push_back(vertex_of(static_cast<int>(node)));
    }
    return cut;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    bool forward;
  };

  static int in(VertexId v) { return 2 * v; }
  static int out(VertexId v) { return 2 * v + 1; }
  static VertexId vertex_of(int node) { return node / 2; }

  void add_arc(int from, int to) {
    adj_[from].push_back({to, 1, static_cast<int>(adj_[to].size()), true});
    adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1, false});
  }

  bool augment() {
    std::vector<std::pair<int, int>> parent(adj_.size(), {-1, -1});
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty() && !seen[sink_]) {
      const int node = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(adj_[node].size()); ++i) {
        const Arc& a = adj_[node][i];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          parent[a.to] = {node, i};
          queue.push_back(a.to);
        }
      }
    }
    if (!seen[sink_]) return false;
    for (int node = sink_; node != source_;) {
      auto [prev, idx] = parent[node];
      Arc& a = adj_[prev][idx];
      a.cap -= 1;
      adj_[a.to][a.rev].cap += 1;
      node = prev;
    }
    return true;
  }

  std::vector<char> reachable() const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[node]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  std::vector<std::vector<Arc>> adj_;
  int source_;
  int sink_;
  int flow_ = 0;
};

void check_pair(const SkeletonGraph& g, VertexId u, VertexId v) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(ErrorCode::kUnknownVertex, "vertex id out of range");
  }
  if (u == v) throw Error(ErrorCode::kSameVertex, "endpoints coincide");
}

}  // namespace

int local_connectivity(const SkeletonGraph& g, VertexId u, VertexId v, int limit) {
  check_pair(g, u, v);
  SplitNetwork net(g, u, v);
  return net.run(limit);
}

Connectivity vertex_connectivity(const SkeletonGraph& g) {
  const std::size_t n = g.num_vertices();
  Connectivity result;
  if (n <= 1) {
    result.complete = true;
    return result;
  }
  const auto comps = g.components();
  if (comps.size() > 1) {
    result.cut = CutSet{{}, comps[0].front(), comps[1].front()};
    return result;
  }
  if (g.is_complete()) {
    result.kappa = static_cast<int>(n) - 1;
    result.complete = true;
    return result;
  }

  // Start from the neighbourhood of a minimum-degree vertex.
  VertexId low = 0;
  for (VertexId v = 1; v < static_cast<VertexId>(n); ++v) {
    if (g.neighbors(v).size() < g.neighbors(low).size()) low = v;
  }
  VertexId far = 0;
  while (far == low || g.adjacent(low, far)) ++far;
  result.kappa = static_cast<int>(g.neighbors(low).size());
  result.cut = CutSet{g.neighbors(low), std::min(low, far), std::max(low, far)};

  // A minimum separator misses one of v_0..v_kappa; pair it with every later
  // vertex.
  for (VertexId i = 0; i < static_cast<VertexId>(n) && i <= result.kappa; ++i) {
    for (VertexId j = i + 1; j < static_cast<VertexId>(n); ++j) {
      if (g.adjacent(i, j)) continue;
      SplitNetwork net(g, i, j);
      const int flow = net.run(result.kappa);
      if (flow < result.kappa) {
        result.kappa = flow;
        result.cut = CutSet{net.min_cut(), i, j};
      }
    }
  }
  return result;
}

PathFamily independent_paths(const SkeletonGraph& g, VertexId u, VertexId v) {
  check_pair(g, u, v);
  SplitNetwork net(g, u, v);
  net.run(-1);
  return PathFamily{u, v, net.paths()};
}

bool is_valid_path_family(const SkeletonGraph& g, const PathFamily& family) {
  const std::size_t n = g.num_vertices();
  std::vector<char> used(n, 0);
  for (const auto& path : family.paths) {
    if (path.size() < 2 || path.front() != family.u || path.back() != family.v) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i] < 0 || static_cast<std::size_t>(path[i]) >= n) return false;
      if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const VertexId w = path[i];
      if (w == family.u || w == family.v || used[w]) return false;
      used[w] = 1;
    }
  }
  // At most one direct edge path.
  const auto direct = std::count_if(family.paths.begin(), family.paths.end(),
                                    [](const auto& p) { return p.size() == 2; });
  return direct <= 1;
}

LiuScan liu_scan(const SkeletonGraph& g, int k) {
  const std::size_t n = g.num_vertices();
  if (k >= 0 && n <= static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kTooSmall, "graph needs at least k+1 vertices");
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::kNotConnected, "Liu's criterion needs a connected graph");
  }
  LiuScan scan;
  scan.paths_found = k;
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) {
      if (g.adjacent(u, v) || !g.adjacency_row(u).intersects(g.adjacency_row(v))) {
        continue;
      }
      ++scan.pairs_checked;
      const int found = local_connectivity(g, u, v, k);
      if (found < k) {
        scan.holds = false;
        scan.failing_pair = {u, v};
        scan.paths_found = found;
        return scan;
      }
    }
  }
  return scan;
}

SimplicialComplex outside_subcomplex(const SimplicialComplex& c, VertexId x) {
  const VertexSet near = neighborhood(c, x);
  if (near.size() == c.num_vertices()) {
    throw Error(ErrorCode::kEmptyOutside,
                "every vertex is adjacent to " + c.label(x));
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    if (!near.contains(v)) rest.push_back(v);
  }
  return induced(c, Face::from_sorted(std::move(rest)));
}

bool is_outside_connected(const SimplicialComplex& c, VertexId x) {
  return is_connected(outside_subcomplex(c, x));
}

}  // namespace scx
