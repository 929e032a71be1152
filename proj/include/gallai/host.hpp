#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gallai {

enum class HostKind { Complete, CompleteBipartite };
enum class Side : std::uint8_t { U, V };

// A host vertex. For complete hosts `side` is ignored; for K_{n,n} the vertex
// is (side, position).
struct VertexId {
  int position = 0;
  Side side = Side::U;

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
  int value = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Vertex permutation over flat vertex indices (see HostGraph::flat).
using Permutation = std::vector<int>;

// K_n or the balanced K_{n,n}, with a fixed edge-index scheme:
//   complete:  edge {i, j}, i < j, has its rank in lexicographic pair order;
//   bipartite: edge (u_i, v_j) has index i * n + j.
// Flat vertex indices are 0..n-1 for complete hosts, and u_i -> i,
// v_j -> n + j for bipartite hosts.
class HostGraph {
 public:
  static HostGraph complete(int n);
  static HostGraph bipartite(int n);
  // "Kn:<n>" or "Knn:<n>".
  static HostGraph parse(std::string_view descriptor);

  HostKind kind() const { return kind_; }
  bool is_bipartite() const { return kind_ == HostKind::CompleteBipartite; }
  int n() const { return n_; }
  int vertex_count() const { return is_bipartite() ? 2 * n_ : n_; }
  int edge_count() const { return m_; }
  std::string descriptor() const;

  EdgeId edge_index(VertexId u, VertexId v) const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  bool edges_adjacent(EdgeId e1, EdgeId e2) const;

  int flat(VertexId v) const;
  VertexId vertex(int flat_index) const;
  std::pair<int, int> flat_endpoints(int edge) const { return endpoints_[edge]; }
  // Edge index between two flat vertices, or -1 when they are not adjacent.
  int edge_between(int flat_u, int flat_v) const {
    return edge_table_[static_cast<std::size_t>(flat_u) * vertex_count() + flat_v];
  }

  friend bool operator==(const HostGraph& a, const HostGraph& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  HostGraph(HostKind kind, int n);
  void check_edge(EdgeId e) const;

  HostKind kind_;
  int n_;
  int m_;
  std::vector<std::pair<int, int>> endpoints_;
  std::vector<int> edge_table_;
};

// Largest hosts whose automorphism group is materialized.
inline constexpr int kMaxMaterializedComplete = 8;
inline constexpr int kMaxMaterializedBipartite = 5;

// Full vertex automorphism group: S_n for K_n, and (S_n x S_n) extended by
// the side swap for K_{n,n} (order 2 (n!)^2). Identity comes first.
std::vector<Permutation> host_automorphisms(const HostGraph& host);

// Lazy form with no size guard; `visit` returns false to stop early.
void for_each_host_automorphism(const HostGraph& host,
                                const std::function<bool(const Permutation&)>& visit);

std::uint64_t host_automorphism_count(const HostGraph& host);

// Edge permutation induced by a vertex automorphism: result[e] = image of e.
std::vector<int> induced_edge_permutation(const HostGraph& host, const Permutation& p);

}  // namespace gallai
