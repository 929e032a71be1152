#include "gallai/pattern.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "gallai/error.hpp"

namespace gallai {

namespace {

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("malformed builtin pattern name '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> alternating_sides(int vertices) {
  std::vector<int> sides(vertices);
  for (int i = 0; i < vertices; ++i) sides[i] = i % 2;
  return sides;
}

// Vertices of p ordered so that every vertex after the first of its
// component has an earlier neighbour.
std::vector<int> connected_order(const PatternGraph& p) {
  const int nv = p.vertex_count();
  std::vector<int> order;
  std::vector<bool> seen(nv, false);
  std::vector<int> by_degree(nv);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return p.degree(a) > p.degree(b); });
  for (int root : by_degree) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int v = order[head++];
      for (int w = 0; w < nv; ++w) {
        if (p.has_edge(v, w) && !seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

PatternGraph::PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                           std::optional<std::vector<int>> bipartition, std::string name)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      bipartition_(std::move(bipartition)),
      name_(std::move(name)) {
  if (vertex_count_ < 2) throw ValidationError("pattern needs at least 2 vertices");
  if (vertex_count_ > 64) {
    throw GuardError("pattern guard: at most 64 vertices, got " + std::to_string(vertex_count_));
  }
  adjacency_.assign(vertex_count_, 0);
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
      throw ValidationError("pattern edge endpoint out of range");
    }
    if (a == b) throw ValidationError("pattern has a loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (has_edge(a, b)) {
      throw ValidationError("pattern has duplicate edge " + std::to_string(a) + "-" +
                            std::to_string(b));
    }
    adjacency_[a] |= std::uint64_t{1} << b;
    adjacency_[b] |= std::uint64_t{1} << a;
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (adjacency_[v] == 0) {
      throw ValidationError("pattern vertex " + std::to_string(v) + " is isolated");
    }
  }
  if (bipartition_) {
    if (static_cast<int>(bipartition_->size()) != vertex_count_) {
      throw ValidationError("bipartition tag length differs from vertex count");
    }
    for (int side : *bipartition_) {
      if (side != 0 && side != 1) throw ValidationError("bipartition sides must be 0 or 1");
    }
    for (const auto& [a, b] : edges_) {
      if ((*bipartition_)[a] == (*bipartition_)[b]) {
        throw ValidationError("pattern edge " + std::to_string(a) + "-" + std::to_string(b) +
                              " does not cross the bipartition");
      }
    }
  }
}

int PatternGraph::degree(int v) const { return std::popcount(adjacency_[v]); }

bool PatternGraph::is_bipartite() const {
  if (bipartition_) return true;
  std::vector<int> side(vertex_count_, -1);
  for (int root = 0; root < vertex_count_; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < vertex_count_; ++w) {
        if (!has_edge(v, w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool PatternGraph::is_complete() const {
  return edge_count() == vertex_count_ * (vertex_count_ - 1) / 2;
}

PatternGraph path_graph(int vertices) {
  if (vertices < 2) throw ValidationError("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return PatternGraph(vertices, std::move(edges), alternating_sides(vertices),
                      "P" + std::to_string(vertices));
}

PatternGraph star_graph(int leaves) {
  if (leaves < 1) throw ValidationError("star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> sides(leaves + 1, 1);
  sides[0] = 0;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return PatternGraph(leaves + 1, std::move(edges), std::move(sides),
                      leaves == 3 ? "K13" : "K1_" + std::to_string(leaves));
}

PatternGraph complete_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  }
  std::optional<std::vector<int>> sides;
  if (vertices == 2) sides = std::vector<int>{0, 1};
  return PatternGraph(vertices, std::move(edges), std::move(sides),
                      "K" + std::to_string(vertices));
}

PatternGraph multipartite_graph(int parts, int part_size) {
  if (parts < 2 || part_size < 1) {
    throw ValidationError("multipartite graph needs >= 2 parts of size >= 1");
  }
  const int nv = parts * part_size;
  if (nv > 64) {
    throw GuardError("pattern guard: K_(" + std::to_string(parts) + "x" +
                     std::to_string(part_size) + ") has more than 64 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (i / part_size != j / part_size) edges.emplace_back(i, j);
    }
  }
  std::optional<std::vector<int>> sides;
  if (parts == 2) {
    sides = std::vector<int>(nv);
    for (int i = 0; i < nv; ++i) (*sides)[i] = i / part_size;
  }
  return PatternGraph(nv, std::move(edges), std::move(sides),
                      "Kmulti_" + std::to_string(parts) + "x" + std::to_string(part_size));
}

PatternGraph matching_graph(int edge_total) {
  if (edge_total < 1) throw ValidationError("matching needs at least one edge");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_total; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return PatternGraph(2 * edge_total, std::move(edges), alternating_sides(2 * edge_total),
                      "M" + std::to_string(edge_total));
}

PatternGraph p4_plus() {
  // K_{1,3} centred at 0 with a tail edge 3-4.
  return PatternGraph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, std::vector<int>{0, 1, 1, 1, 0},
                      "P4plus");
}

PatternGraph s3_plus() {
  return PatternGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, std::nullopt, "S3plus");
}

PatternGraph builtin_pattern(std::string_view name) {
  if (name == "K13") return star_graph(3);
  if (name == "P4plus") return p4_plus();
  if (name == "S3plus") return s3_plus();
  if (name.starts_with("K1_")) return star_graph(parse_int(name.substr(3), name));
  if (name.starts_with("Kmulti_")) {
    const auto body = name.substr(7);
    const auto x = body.find('x');
    if (x == std::string_view::npos) {
      throw ValidationError("malformed builtin pattern name '" + std::string(name) + "'");
    }
    return multipartite_graph(parse_int(body.substr(0, x), name),
                              parse_int(body.substr(x + 1), name));
  }
  if (name.size() >= 2 && name[0] == 'P') return path_graph(parse_int(name.substr(1), name));
  if (name.size() >= 2 && name[0] == 'M') return matching_graph(parse_int(name.substr(1), name));
  if (name.size() == 2 && name[0] == 'K') {
    const int n = parse_int(name.substr(1), name);
    if (n >= 2) return complete_graph(n);
  }
  throw ValidationError("unknown builtin pattern '" + std::string(name) + "'");
}

std::uint64_t aut_order(const PatternGraph& p) {
  const int nv = p.vertex_count();
  if (nv > kMaxCountingPatternVertices) {
    throw GuardError("aut_order guard: pattern has " + std::to_string(nv) +
                     " vertices, limit " + std::to_string(kMaxCountingPatternVertices));
  }
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [a, b] : p.edges()) {
      if (!p.has_edge(perm[a], perm[b])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

CopyList enumerate_copies(const HostGraph& host, const PatternGraph& p) {
  const int nv = p.vertex_count();
  if (nv > kMaxCountingPatternVertices) {
    throw GuardError("enumerate_copies guard: pattern has " + std::to_string(nv) +
                     " vertices, limit " + std::to_string(kMaxCountingPatternVertices));
  }
  if (host.is_bipartite() && !p.is_bipartite()) {
    throw ValidationError("pattern " + p.name() + " is not bipartite; cannot embed in " +
                          host.descriptor());
  }
  const int ne = p.edge_count();
  std::vector<int> flat;
  if (nv > host.vertex_count()) return CopyList(ne, std::move(flat));

  const std::vector<int> order = connected_order(p);
  std::vector<int> image(nv, -1);
  std::vector<bool> used(host.vertex_count(), false);
  std::vector<int> row(ne);

  auto place = [&](auto&& self, int depth) -> void {
    if (depth == nv) {
      for (int i = 0; i < ne; ++i) {
        const auto [a, b] = p.edges()[i];
        row[i] = host.edge_between(image[a], image[b]);
      }
      std::sort(row.begin(), row.end());
      flat.insert(flat.end(), row.begin(), row.end());
      return;
    }
    const int v = order[depth];
    for (int x = 0; x < host.vertex_count(); ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        if (p.has_edge(v, w) && host.edge_between(x, image[w]) < 0) ok = false;
      }
      if (!ok) continue;
      used[x] = true;
      image[v] = x;
      self(self, depth + 1);
      used[x] = false;
    }
    image[v] = -1;
  };
  place(place, 0);

  // Embeddings related by an automorphism of p share an edge set; keep one.
  const std::size_t rows = flat.size() / static_cast<std::size_t>(ne);
  std::vector<std::size_t> index(rows);
  std::iota(index.begin(), index.end(), 0);
  auto row_at = [&](std::size_t r) { return flat.begin() + static_cast<std::ptrdiff_t>(r * ne); };
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row_at(a), row_at(a) + ne, row_at(b), row_at(b) + ne);
  };
  std::sort(index.begin(), index.end(), less);
  std::vector<int> unique_flat;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0 && !less(index[i - 1], index[i])) continue;
    unique_flat.insert(unique_flat.end(), row_at(index[i]), row_at(index[i]) + ne);
  }
  return CopyList(ne, std::move(unique_flat));
}

bool contains_subgraph(const PatternGraph& bound, const PatternGraph& h) {
  const int nh = h.vertex_count();
  if (nh > kMaxContainedPatternVertices) {
    throw GuardError("contains_subgraph guard: pattern has " + std::to_string(nh) +
                     " vertices, limit " + std::to_string(kMaxContainedPatternVertices));
  }
  if (nh > bound.vertex_count() || h.edge_count() > bound.edge_count()) return false;

  const std::vector<int> order = connected_order(h);
  std::vector<int> image(nh, -1);
  const std::uint64_t all =
      bound.vertex_count() == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << bound.vertex_count()) - 1;

  auto place = [&](auto&& self, int depth, std::uint64_t used) -> bool {
    if (depth == nh) return true;
    const int v = order[depth];
    std::uint64_t candidates = all & ~used;
    for (int d = 0; d < depth; ++d) {
      const int w = order[d];
      if (h.has_edge(v, w)) candidates &= bound.neighbors(image[w]);
    }
    while (candidates != 0) {
      const int x = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (bound.degree(x) < h.degree(v)) continue;
      image[v] = x;
      if (self(self, depth + 1, used | (std::uint64_t{1} << x))) return true;
    }
    return false;
  };
  return place(place, 0, 0);
}

std::string_view target_name(RainbowTarget target) {
  switch (target) {
    case RainbowTarget::P4: return "P4";
    case RainbowTarget::P5: return "P5";
    case RainbowTarget::K13: return "K13";
    case RainbowTarget::P4Plus: return "P4plus";
  }
  return "?";
}

RainbowTarget parse_target(std::string_view name) {
  if (name == "P4") return RainbowTarget::P4;
  if (name == "P5") return RainbowTarget::P5;
  if (name == "K13") return RainbowTarget::K13;
  if (name == "P4plus") return RainbowTarget::P4Plus;
  throw ValidationError("unsupported rainbow target '" + std::string(name) +
                        "' (expected P4, P5, K13 or P4plus)");
}

PatternGraph target_pattern(RainbowTarget target) {
  return builtin_pattern(target_name(target));
}

namespace {

// Number of parts (complete setting) or star leaves (bipartite setting) of
// the bound graph; -1 when the theorem places no subgraph bound.
int bound_parameter(HostKind setting, RainbowTarget target, int colors) {
  auto require = [&](int minimum) {
    if (colors < minimum) {
      throw ValidationError("bound graph for " + std::string(target_name(target)) +
                            " needs at least " + std::to_string(minimum) + " colors, got " +
                            std::to_string(colors));
    }
  };
  if (setting == HostKind::Complete) {
    switch (target) {
      case RainbowTarget::K13: require(4); return colors - 1;
      case RainbowTarget::P4Plus: require(5); return colors - 1;
      case RainbowTarget::P4:
      case RainbowTarget::P5: return -1;
    }
  }
  switch (target) {
    case RainbowTarget::P4: require(3); return colors;
    case RainbowTarget::P5:
    case RainbowTarget::K13: require(5); return colors / 2;  // ceil((colors - 1) / 2)
    case RainbowTarget::P4Plus: break;
  }
  throw ValidationError("no bipartite theorem for rainbow P4plus");
}

}  // namespace

std::optional<PatternGraph> bound_graph(HostKind setting, RainbowTarget target, int colors) {
  const int parameter = bound_parameter(setting, target, colors);
  if (parameter < 0) return std::nullopt;
  if (setting == HostKind::Complete) return multipartite_graph(parameter, 2);
  if (parameter + 1 > 64) {
    throw GuardError("pattern guard: K_{1," + std::to_string(parameter) + "} exceeds 64 vertices");
  }
  return star_graph(parameter);
}

bool fits_bound(HostKind setting, RainbowTarget target, int colors, const PatternGraph& h) {
  const int parameter = bound_parameter(setting, target, colors);
  if (parameter < 0) return true;
  // An embedding of h touches at most |V(h)| parts or leaves.
  const int trimmed = std::min(parameter, h.vertex_count());
  if (setting == HostKind::Complete) {
    if (trimmed < 2) return false;
    return contains_subgraph(multipartite_graph(trimmed, 2), h);
  }
  return contains_subgraph(star_graph(trimmed), h);
}

}  // namespace gallai
