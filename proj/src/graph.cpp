#include "movnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace movnet {

namespace {

constexpr int kUnreached = -1;

// BFS distances from `source`; kUnreached where not reachable.
std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), kUnreached);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  int max_id = -1;
  for (const Edge& e : edges) max_id = std::max({max_id, e.u, e.v});
  return from_edges(edges, max_id + 1);
}

Graph Graph::from_edges(const std::vector<Edge>& edges, int vertex_count) {
  Graph g;
  g.n_ = vertex_count;
  g.adj_.resize(vertex_count);
  g.adj_weights_.resize(vertex_count);

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    const int u = std::min(e.u, e.v);
    const int v = std::max(e.u, e.v);
    if (u < 0 || v >= vertex_count) {
      throw VertexOutOfRangeError(u < 0 ? std::min(e.u, e.v) : v, vertex_count);
    }
    if (u == v) throw SelfLoopError(u);
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw NonPositiveWeightError(u, v, e.weight);
    }
    if (!seen.insert({u, v}).second) throw DuplicateEdgeError(u, v);
    g.edges_.push_back({u, v, e.weight});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_weights_[e.u].push_back(e.weight);
    g.adj_[e.v].push_back(e.u);
    g.adj_weights_[e.v].push_back(e.weight);
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::vector<std::size_t> order(g.adj_[v].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.adj_[v][a] < g.adj_[v][b]; });
    std::vector<int> nbr(order.size());
    std::vector<double> wts(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      nbr[k] = g.adj_[v][order[k]];
      wts[k] = g.adj_weights_[v][order[k]];
    }
    g.adj_[v] = std::move(nbr);
    g.adj_weights_[v] = std::move(wts);
  }
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

double Graph::weight(int u, int v) const {
  if (u < 0 || u >= n_) throw VertexOutOfRangeError(u, n_);
  if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
  const auto& nbr = adj_[u];
  const auto it = std::lower_bound(nbr.begin(), nbr.end(), v);
  if (it == nbr.end() || *it != v) return 0.0;
  return adj_weights_[u][static_cast<std::size_t>(it - nbr.begin())];
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});            // outer cycle
    edges.push_back({i, i + 5, 1.0});                  // spoke
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0});    // inner pentagram
  }
  return Graph::from_edges(edges, 10);
}

namespace {

bool parse_int(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_double(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream tokens(line);
    std::vector<std::string> tok;
    std::string t;
    while (tokens >> t) tok.push_back(t);
    if (tok.size() != 2 && tok.size() != 3) {
      throw MalformedLineError(line_no, "expected \"u v\" or \"u v w\", got \"" + line + "\"");
    }
    int u = 0;
    int v = 0;
    if (!parse_int(tok[0], u) || !parse_int(tok[1], v) || u < 0 || v < 0) {
      throw MalformedLineError(line_no, "vertex ids must be nonnegative integers");
    }
    double w = 1.0;
    if (tok.size() == 3 && !parse_double(tok[2], w)) {
      throw MalformedLineError(line_no, "weight is not a number: \"" + tok[2] + "\"");
    }
    if (u == v) throw SelfLoopError(u);
    if (!(w > 0.0) || !std::isfinite(w)) throw NonPositiveWeightError(std::min(u, v), std::max(u, v), w);
    edges.push_back({u, v, w});
  }
  if (edges.empty()) throw EmptyEdgeListError();
  return Graph::from_edges(edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    if (e.weight != 1.0) {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e.weight,
                                     std::chars_format::general, 17);
      out += ' ';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreached; });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), kUnreached);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != kUnreached) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] == kUnreached) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

void require_no_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw IsolatedVertexError(v);
  }
}

namespace {

// Shortest cycle through BFS roots; min over all roots is the girth.
std::optional<int> girth_of(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), kUnreached);
    std::vector<int> parent(g.vertex_count(), kUnreached);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool extend_path(const Graph& g, std::vector<int>& path, std::vector<char>& used,
                 bool close_cycle) {
  const int n = g.vertex_count();
  if (static_cast<int>(path.size()) == n) {
    return !close_cycle || g.has_edge(path.back(), path.front());
  }
  for (int w : g.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    if (extend_path(g, path, used, close_cycle)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool hamiltonian_cycle_exists(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  // A Hamiltonian cycle visits every vertex, so fixing the start loses nothing.
  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  return extend_path(g, path, used, /*close_cycle=*/true);
}

bool hamiltonian_path_exists(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return true;
  if (!is_connected(g)) return false;
  std::vector<int> degree_one;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) degree_one.push_back(v);
  }
  if (degree_one.size() > 2) return false;
  // Degree-1 vertices can only be endpoints; start there when any exist.
  std::vector<int> starts;
  if (!degree_one.empty()) {
    starts = degree_one;
  } else {
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), 0);
  }
  for (int s : starts) {
    std::vector<int> path{s};
    std::vector<char> used(n, 0);
    used[s] = 1;
    if (extend_path(g, path, used, /*close_cycle=*/false)) return true;
  }
  return false;
}

namespace {

Graph delete_vertex(const Graph& g, int victim) {
  std::vector<int> remap(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v != victim) remap[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == victim || e.v == victim) continue;
    edges.push_back({remap[e.u], remap[e.v], e.weight});
  }
  return Graph::from_edges(edges, g.vertex_count() - 1);
}

}  // namespace

GraphReport analyze(const Graph& g, const AnalyzeOptions& opts) {
  const int n = g.vertex_count();
  if (n < 1) throw ConfigInvalidError("vertex_count >= 1");
  if (n > opts.max_exact_vertices) throw TooLargeForExactSearchError(n, opts.max_exact_vertices);

  GraphReport report;
  report.connected = is_connected(g);

  bool regular = true;
  for (int v = 1; v < n && regular; ++v) regular = g.degree(v) == g.degree(0);
  if (regular) report.regular_degree = g.degree(0);

  report.girth = girth_of(g);

  if (report.connected) {
    int diameter = 0;
    for (int s = 0; s < n; ++s) {
      for (int d : bfs_distances(g, s)) diameter = std::max(diameter, d);
    }
    report.diameter = diameter;
  }

  report.has_hamiltonian_path = hamiltonian_path_exists(g);
  report.has_hamiltonian_cycle = hamiltonian_cycle_exists(g);

  if (opts.deep) {
    bool hypo = !report.has_hamiltonian_cycle && n >= 4;
    for (int v = 0; hypo && v < n; ++v) {
      hypo = hamiltonian_cycle_exists(delete_vertex(g, v));
    }
    report.hypohamiltonian = hypo;
  }
  return report;
}

}  // namespace movnet
