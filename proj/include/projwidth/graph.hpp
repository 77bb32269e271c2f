#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace projwidth {

using VertexId = int;
using EdgeId = int;
using DartId = int;

/// Thrown for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Abstract (possibly multi-) graph: vertices 0..n-1 and an edge list.
///
/// This is the common currency between the embedded machinery and the
/// brute-force oracles; it carries no embedding information.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

  Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges)
      : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
      throw Error("edge endpoint out of range");
    const EdgeId id = num_edges();
    edges_.emplace_back(u, v);
    adjacency_[u].push_back({v, id});
    if (u != v) adjacency_[v].push_back({u, id});
    return id;
  }

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::pair<VertexId, VertexId>& edge(EdgeId e) const {
    return edges_[e];
  }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  struct Incidence {
    VertexId neighbor;
    EdgeId edge;
  };
  const std::vector<Incidence>& incident(VertexId v) const {
    return adjacency_[v];
  }

  int degree(VertexId v) const {
    return static_cast<int>(adjacency_[v].size());
  }

  int max_degree() const {
    int best = 0;
    for (VertexId v = 0; v < num_vertices(); ++v)
      best = std::max(best, degree(v));
    return best;
  }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& inc = adjacency_[u];
    return std::any_of(inc.begin(), inc.end(),
                       [v](const Incidence& i) { return i.neighbor == v; });
  }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const auto& e) { return e.first == e.second; });
  }

  /// Subgraph induced by removing `removed` (a 0/1 mask). Vertex ids are kept;
  /// removed vertices become isolated.
  Graph without(const std::vector<char>& removed) const {
    Graph out(num_vertices());
    for (auto [u, v] : edges_)
      if (!removed[u] && !removed[v]) out.add_edge(u, v);
    return out;
  }

  /// Number of edges with both endpoints in `members`.
  int induced_edge_count(const std::vector<VertexId>& members) const {
    std::vector<char> in(adjacency_.size(), 0);
    for (VertexId v : members) in[v] = 1;
    int count = 0;
    for (auto [u, v] : edges_)
      if (in[u] && in[v]) ++count;
    return count;
  }

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

}  // namespace projwidth
