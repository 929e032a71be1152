#include "gallai/host.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "gallai/error.hpp"

namespace gallai {

HostGraph::HostGraph(HostKind kind, int n) : kind_(kind), n_(n) {
  const int vc = vertex_count();
  edge_table_.assign(static_cast<std::size_t>(vc) * vc, -1);
  if (kind == HostKind::Complete) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) endpoints_.emplace_back(i, j);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) endpoints_.emplace_back(i, n + j);
    }
  }
  m_ = static_cast<int>(endpoints_.size());
  for (int e = 0; e < m_; ++e) {
    const auto [a, b] = endpoints_[e];
    edge_table_[static_cast<std::size_t>(a) * vc + b] = e;
    edge_table_[static_cast<std::size_t>(b) * vc + a] = e;
  }
}

HostGraph HostGraph::complete(int n) {
  if (n < 2) throw ValidationError("complete host requires n >= 2, got " + std::to_string(n));
  if (n > 64) throw GuardError("host guard: K_n limited to n <= 64, got " + std::to_string(n));
  return HostGraph(HostKind::Complete, n);
}

HostGraph HostGraph::bipartite(int n) {
  if (n < 1) throw ValidationError("bipartite host requires n >= 1, got " + std::to_string(n));
  if (n > 32) throw GuardError("host guard: K_{n,n} limited to n <= 32, got " + std::to_string(n));
  return HostGraph(HostKind::CompleteBipartite, n);
}

HostGraph HostGraph::parse(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("malformed host descriptor '" + std::string(descriptor) +
                          "' (expected Kn:<n> or Knn:<n>)");
  }
  const auto family = descriptor.substr(0, colon);
  const auto digits = descriptor.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ValidationError("malformed host size in '" + std::string(descriptor) + "'");
  }
  if (family == "Kn") return complete(n);
  if (family == "Knn") return bipartite(n);
  throw ValidationError("unknown host family '" + std::string(family) + "'");
}

std::string HostGraph::descriptor() const {
  return (is_bipartite() ? "Knn:" : "Kn:") + std::to_string(n_);
}

int HostGraph::flat(VertexId v) const {
  if (v.position < 0 || v.position >= n_) {
    throw ValidationError("vertex position " + std::to_string(v.position) +
                          " out of range for " + descriptor());
  }
  return is_bipartite() && v.side == Side::V ? n_ + v.position : v.position;
}

VertexId HostGraph::vertex(int flat_index) const {
  if (flat_index < 0 || flat_index >= vertex_count()) {
    throw ValidationError("flat vertex " + std::to_string(flat_index) + " out of range");
  }
  if (is_bipartite() && flat_index >= n_) return {flat_index - n_, Side::V};
  return {flat_index, Side::U};
}

EdgeId HostGraph::edge_index(VertexId u, VertexId v) const {
  const int a = flat(u);
  const int b = flat(v);
  if (a == b) throw ValidationError("edge_index: endpoints coincide");
  const int e = edge_between(a, b);
  if (e < 0) throw ValidationError("edge_index: both endpoints lie on the same side");
  return EdgeId{e};
}

void HostGraph::check_edge(EdgeId e) const {
  if (e.value < 0 || e.value >= m_) {
    throw ValidationError("edge id " + std::to_string(e.value) + " out of range for " +
                          descriptor());
  }
}

std::pair<VertexId, VertexId> HostGraph::endpoints(EdgeId e) const {
  check_edge(e);
  const auto [a, b] = endpoints_[e.value];
  return {vertex(a), vertex(b)};
}

bool HostGraph::edges_adjacent(EdgeId e1, EdgeId e2) const {
  check_edge(e1);
  check_edge(e2);
  if (e1 == e2) throw ValidationError("edges_adjacent: the two edge ids are equal");
  const auto [a, b] = endpoints_[e1.value];
  const auto [c, d] = endpoints_[e2.value];
  return a == c || a == d || b == c || b == d;
}

std::uint64_t host_automorphism_count(const HostGraph& host) {
  std::uint64_t f = 1;
  for (int i = 2; i <= host.n(); ++i) f *= static_cast<std::uint64_t>(i);
  return host.is_bipartite() ? 2 * f * f : f;
}

void for_each_host_automorphism(const HostGraph& host,
                                const std::function<bool(const Permutation&)>& visit) {
  const int n = host.n();
  if (!host.is_bipartite()) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (!visit(p)) return;
    } while (std::next_permutation(p.begin(), p.end()));
    return;
  }
  Permutation image(2 * n);
  for (int swap = 0; swap < 2; ++swap) {
    std::vector<int> pu(n), pv(n);
    std::iota(pu.begin(), pu.end(), 0);
    do {
      std::iota(pv.begin(), pv.end(), 0);
      do {
        for (int i = 0; i < n; ++i) {
          image[i] = swap ? n + pu[i] : pu[i];
          image[n + i] = swap ? pv[i] : n + pv[i];
        }
        if (!visit(image)) return;
      } while (std::next_permutation(pv.begin(), pv.end()));
    } while (std::next_permutation(pu.begin(), pu.end()));
  }
}

std::vector<Permutation> host_automorphisms(const HostGraph& host) {
  const bool too_big = host.is_bipartite() ? host.n() > kMaxMaterializedBipartite
                                           : host.n() > kMaxMaterializedComplete;
  if (too_big) {
    throw GuardError("automorphism materialization guard: " + host.descriptor() +
                     " exceeds n <= " +
                     std::to_string(host.is_bipartite() ? kMaxMaterializedBipartite
                                                        : kMaxMaterializedComplete));
  }
  std::vector<Permutation> group;
  group.reserve(host_automorphism_count(host));
  for_each_host_automorphism(host, [&](const Permutation& p) {
    group.push_back(p);
    return true;
  });
  return group;
}

std::vector<int> induced_edge_permutation(const HostGraph& host, const Permutation& p) {
  std::vector<int> image(host.edge_count());
  for (int e = 0; e < host.edge_count(); ++e) {
    const auto [a, b] = host.flat_endpoints(e);
    const int f = host.edge_between(p[a], p[b]);
    if (f < 0) throw ValidationError("permutation is not a host automorphism");
    image[e] = f;
  }
  return image;
}

}  // namespace gallai
