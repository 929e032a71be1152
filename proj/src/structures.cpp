#include "gallai/structures.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "gallai/counting.hpp"
#include "gallai/error.hpp"

namespace gallai {

namespace {

std::vector<std::vector<int>> consecutive(const std::vector<int>& sizes, int& next) {
  std::vector<std::vector<int>> parts;
  for (int s : sizes) {
    if (s < 0) throw ValidationError("part sizes must be non-negative");
    std::vector<int> part;
    for (int i = 0; i < s; ++i) part.push_back(next++);
    parts.push_back(std::move(part));
  }
  return parts;
}

int total(const std::vector<int>& sizes) {
  int sum = 0;
  for (int s : sizes) sum += s;
  return sum;
}

// Parts must cover 0..n-1 exactly once; parts from index `first_required`
// on must be non-empty.
void check_partition(const std::vector<std::vector<int>>& parts, int n, std::size_t first_required,
                     const std::string& what) {
  std::vector<int> seen(n, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i >= first_required && parts[i].empty()) {
      throw ValidationError(what + " part " + std::to_string(i + 1) + " must be non-empty");
    }
    for (int v : parts[i]) {
      if (v < 0 || v >= n) {
        throw ValidationError(what + " vertex " + std::to_string(v) + " out of range");
      }
      if (seen[v]++) throw ValidationError(what + " vertex " + std::to_string(v) + " repeated");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) throw ValidationError(what + " parts miss vertex " + std::to_string(v));
  }
}

int role_edge(const HostGraph& host, Side u_side, int a, int b) {
  return u_side == Side::U ? a * host.n() + b : b * host.n() + a;
}

std::vector<int> part_of(const std::vector<std::vector<int>>& parts, int n) {
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) owner[v] = static_cast<int>(i);
  }
  return owner;
}

EdgeColoring finish(const HostGraph& host, int k, std::vector<int> colors, int id) {
  EdgeColoring c{host, k, std::move(colors)};
  const auto problems = validate(c);
  if (!problems.empty()) {
    throw ValidationError("structure " + std::to_string(id) + " spec is not an exact " +
                          std::to_string(k) + "-coloring: " + problems.front());
  }
  return c;
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Row of the coloring seen from the side playing U: colors of (a, b) over b.
int role_color(const EdgeColoring& c, Side u_side, int a, int b) {
  return c.colors[role_edge(c.host, u_side, a, b)];
}

std::optional<StructureSpec> match1(const EdgeColoring& c) {
  const HostGraph& h = c.host;
  for (int base = 1; base <= c.k; ++base) {
    std::vector<std::uint64_t> ends(c.k + 1, 0);
    for (int e = 0; e < h.edge_count(); ++e) {
      if (c.colors[e] == base) continue;
      const auto [a, b] = h.flat_endpoints(e);
      ends[c.colors[e]] |= bit(a) | bit(b);
    }
    std::uint64_t used = 0;
    bool disjoint = true;
    for (int color = 1; color <= c.k && disjoint; ++color) {
      if (color == base) continue;
      if (used & ends[color]) disjoint = false;
      used |= ends[color];
    }
    if (!disjoint) continue;
    StructureSpec spec;
    spec.id = 1;
    spec.n = h.n();
    const std::uint64_t all = h.n() == 64 ? ~std::uint64_t{0} : bit(h.n()) - 1;
    spec.parts.push_back(members(all & ~used));
    for (int color = 1; color <= c.k; ++color) {
      if (color != base) spec.parts.push_back(members(ends[color]));
    }
    for (int e = 0; e < h.edge_count(); ++e) {
      if (c.colors[e] != base) continue;
      const auto [a, b] = h.flat_endpoints(e);
      for (int color = 1; color <= c.k; ++color) {
        if (color != base && (ends[color] & bit(a)) && (ends[color] & bit(b))) {
          spec.one_edges.emplace_back(a, b);
        }
      }
    }
    return spec;
  }
  return std::nullopt;
}

std::optional<StructureSpec> match2(const EdgeColoring& c) {
  const HostGraph& h = c.host;
  if (h.n() < 3) return std::nullopt;
  for (int v = 0; v < h.n(); ++v) {
    int base = 0;
    bool mono = true;
    for (int e = 0; e < h.edge_count() && mono; ++e) {
      const auto [a, b] = h.flat_endpoints(e);
      if (a == v || b == v) continue;
      if (base == 0) base = c.colors[e];
      mono = c.colors[e] == base;
    }
    if (!mono) continue;
    std::vector<int> relabel(c.k + 1, 0);
    relabel[base] = 1;
    int next = 1;
    StructureSpec spec;
    spec.id = 2;
    spec.n = h.n();
    spec.center = v;
    for (int w = 0; w < h.n(); ++w) {
      if (w == v) continue;
      int& label = relabel[c.colors[h.edge_between(v, w)]];
      if (label == 0) label = ++next;
      spec.center_colors.push_back(label);
    }
    return spec;
  }
  return std::nullopt;
}

std::optional<StructureSpec> match3(const EdgeColoring& c, Side u_side) {
  const int n = c.host.n();
  std::vector<std::vector<int>> by_color(c.k + 1);
  for (int a = 0; a < n; ++a) {
    const int color = role_color(c, u_side, a, 0);
    for (int b = 1; b < n; ++b) {
      if (role_color(c, u_side, a, b) != color) return std::nullopt;
    }
    by_color[color].push_back(a);
  }
  StructureSpec spec;
  spec.id = 3;
  spec.n = n;
  spec.u_side = u_side;
  for (int color = 1; color <= c.k; ++color) spec.u_parts.push_back(by_color[color]);
  return spec;
}

std::optional<StructureSpec> match4(const EdgeColoring& c, Side u_side, int base) {
  const int n = c.host.n();
  StructureSpec spec;
  spec.id = 4;
  spec.n = n;
  spec.u_side = u_side;
  for (int a = 0; a < n; ++a) {
    bool all_base = true;
    for (int b = 0; b < n && all_base; ++b) all_base = role_color(c, u_side, a, b) == base;
    (all_base ? spec.u2 : spec.u1).push_back(a);
  }
  if (spec.u1.empty()) {
    spec.u1.push_back(spec.u2.front());
    spec.u2.erase(spec.u2.begin());
  }
  const int first = spec.u1.front();
  for (int a : spec.u1) {
    for (int b = 0; b < n; ++b) {
      if (role_color(c, u_side, a, b) != role_color(c, u_side, first, b)) return std::nullopt;
    }
  }
  std::vector<std::vector<int>> by_color(c.k + 1);
  for (int b = 0; b < n; ++b) by_color[role_color(c, u_side, first, b)].push_back(b);
  spec.v_parts.push_back(by_color[base]);
  for (int color = 1; color <= c.k; ++color) {
    if (color != base) spec.v_parts.push_back(by_color[color]);
  }
  return spec;
}

std::optional<StructureSpec> match5(const EdgeColoring& c, Side u_side, int base) {
  const int n = c.host.n();
  std::vector<std::uint64_t> rows(c.k + 1, 0);
  std::vector<std::uint64_t> cols(c.k + 1, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int color = role_color(c, u_side, a, b);
      if (color == base) continue;
      rows[color] |= bit(a);
      cols[color] |= bit(b);
    }
  }
  std::uint64_t used_rows = 0;
  std::uint64_t used_cols = 0;
  for (int color = 1; color <= c.k; ++color) {
    if (color == base) continue;
    if ((used_rows & rows[color]) || (used_cols & cols[color])) return std::nullopt;
    used_rows |= rows[color];
    used_cols |= cols[color];
  }
  StructureSpec spec;
  spec.id = 5;
  spec.n = n;
  spec.u_side = u_side;
  const std::uint64_t all = bit(n) - 1;
  spec.u_parts.push_back(members(all & ~used_rows));
  spec.v_parts.push_back(members(all & ~used_cols));
  for (int color = 1; color <= c.k; ++color) {
    if (color == base) continue;
    spec.u_parts.push_back(members(rows[color]));
    spec.v_parts.push_back(members(cols[color]));
    for (int a : members(rows[color])) {
      for (int b : members(cols[color])) {
        if (role_color(c, u_side, a, b) == base) spec.one_edges.emplace_back(a, b);
      }
    }
  }
  return spec;
}

}  // namespace

StructureSpec structure1(const std::vector<int>& part_sizes) {
  StructureSpec spec;
  spec.id = 1;
  int next = 0;
  spec.parts = consecutive(part_sizes, next);
  spec.n = next;
  return spec;
}

StructureSpec structure2(int n, int center, std::vector<int> center_colors) {
  StructureSpec spec;
  spec.id = 2;
  spec.n = n;
  spec.center = center;
  spec.center_colors = std::move(center_colors);
  return spec;
}

StructureSpec structure3(const std::vector<int>& u_sizes) {
  StructureSpec spec;
  spec.id = 3;
  int next = 0;
  spec.u_parts = consecutive(u_sizes, next);
  spec.n = next;
  return spec;
}

StructureSpec structure4(int u1_size, int u2_size, const std::vector<int>& v_sizes) {
  StructureSpec spec;
  spec.id = 4;
  int next = 0;
  auto u = consecutive({u1_size, u2_size}, next);
  spec.u1 = u[0];
  spec.u2 = u[1];
  spec.n = next;
  next = 0;
  spec.v_parts = consecutive(v_sizes, next);
  if (next != spec.n) throw ValidationError("structure 4 sides have different sizes");
  return spec;
}

StructureSpec structure5(const std::vector<int>& u_sizes, const std::vector<int>& v_sizes) {
  StructureSpec spec;
  spec.id = 5;
  int next = 0;
  spec.u_parts = consecutive(u_sizes, next);
  spec.n = next;
  next = 0;
  spec.v_parts = consecutive(v_sizes, next);
  if (next != spec.n || total(u_sizes) != total(v_sizes)) {
    throw ValidationError("structure 5 sides have different sizes");
  }
  return spec;
}

HostGraph structure_host(const StructureSpec& spec) {
  if (spec.id < 1 || spec.id > 5) {
    throw ValidationError("structure id must be 1..5, got " + std::to_string(spec.id));
  }
  return spec.id <= 2 ? HostGraph::complete(spec.n) : HostGraph::bipartite(spec.n);
}

EdgeColoring generate_structure(const StructureSpec& spec) {
  const HostGraph host = structure_host(spec);
  const int n = spec.n;
  std::vector<int> colors(host.edge_count(), 1);
  switch (spec.id) {
    case 1: {
      if (spec.parts.empty()) throw ValidationError("structure 1 needs at least one part");
      check_partition(spec.parts, n, spec.parts.size(), "structure 1");
      const auto owner = part_of(spec.parts, n);
      for (int e = 0; e < host.edge_count(); ++e) {
        const auto [a, b] = host.flat_endpoints(e);
        if (owner[a] == owner[b] && owner[a] > 0) colors[e] = owner[a] + 1;
      }
      for (const auto& [a, b] : spec.one_edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b || owner[a] != owner[b] ||
            owner[a] == 0) {
          throw ValidationError("structure 1 one-edge must lie inside a part V_i with i >= 2");
        }
        colors[host.edge_between(a, b)] = 1;
      }
      return finish(host, static_cast<int>(spec.parts.size()), std::move(colors), 1);
    }
    case 2: {
      if (n < 3) throw ValidationError("structure 2 needs n >= 3");
      if (spec.center < 0 || spec.center >= n) throw ValidationError("structure 2 center out of range");
      if (static_cast<int>(spec.center_colors.size()) != n - 1) {
        throw ValidationError("structure 2 needs n - 1 center colors");
      }
      int k = 1;
      int j = 0;
      for (int w = 0; w < n; ++w) {
        if (w == spec.center) continue;
        const int color = spec.center_colors[j++];
        if (color < 1) throw ValidationError("structure 2 colors must be positive");
        colors[host.edge_between(spec.center, w)] = color;
        k = std::max(k, color);
      }
      return finish(host, k, std::move(colors), 2);
    }
    case 3: {
      check_partition(spec.u_parts, n, 0, "structure 3 U");
      const auto owner = part_of(spec.u_parts, n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) colors[role_edge(host, spec.u_side, a, b)] = owner[a] + 1;
      }
      return finish(host, static_cast<int>(spec.u_parts.size()), std::move(colors), 3);
    }
    case 4: {
      if (spec.u1.empty()) throw ValidationError("structure 4 needs |U_1| >= 1");
      check_partition({spec.u1, spec.u2}, n, 2, "structure 4 U");
      if (spec.v_parts.empty()) throw ValidationError("structure 4 needs at least one V part");
      check_partition(spec.v_parts, n, 1, "structure 4 V");
      const auto v_owner = part_of(spec.v_parts, n);
      for (int a : spec.u1) {
        for (int b = 0; b < n; ++b) colors[role_edge(host, spec.u_side, a, b)] = v_owner[b] + 1;
      }
      return finish(host, static_cast<int>(spec.v_parts.size()), std::move(colors), 4);
    }
    case 5: {
      if (spec.u_parts.empty() || spec.u_parts.size() != spec.v_parts.size()) {
        throw ValidationError("structure 5 needs the same positive number of U and V parts");
      }
      check_partition(spec.u_parts, n, 1, "structure 5 U");
      check_partition(spec.v_parts, n, 1, "structure 5 V");
      const auto u_owner = part_of(spec.u_parts, n);
      const auto v_owner = part_of(spec.v_parts, n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (u_owner[a] == v_owner[b] && u_owner[a] > 0) {
            colors[role_edge(host, spec.u_side, a, b)] = u_owner[a] + 1;
          }
        }
      }
      for (const auto& [a, b] : spec.one_edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || u_owner[a] != v_owner[b] || u_owner[a] == 0) {
          throw ValidationError("structure 5 one-edge must lie in U_i x V_i with i >= 2");
        }
        colors[role_edge(host, spec.u_side, a, b)] = 1;
      }
      return finish(host, static_cast<int>(spec.u_parts.size()), std::move(colors), 5);
    }
    default:
      break;
  }
  throw ValidationError("structure id must be 1..5");
}

std::optional<StructureSpec> match_structure(const EdgeColoring& c, int id) {
  require_valid(c);
  const bool bipartite = c.host.is_bipartite();
  if ((id <= 2) == bipartite) return std::nullopt;
  switch (id) {
    case 1: return match1(c);
    case 2: return match2(c);
    default: break;
  }
  for (Side side : {Side::U, Side::V}) {
    if (id == 3) {
      if (auto spec = match3(c, side)) return spec;
      continue;
    }
    for (int base = 1; base <= c.k; ++base) {
      auto spec = id == 4 ? match4(c, side, base) : match5(c, side, base);
      if (spec) return spec;
    }
  }
  return std::nullopt;
}

StructureVerdict classify_structure(const EdgeColoring& c, const std::optional<PatternGraph>& probe) {
  require_valid(c);
  StructureVerdict verdict;
  const std::vector<int> order =
      c.host.is_bipartite() ? std::vector<int>{3, 4, 5} : std::vector<int>{1, 2};
  for (int id : order) {
    auto spec = match_structure(c, id);
    if (!spec) continue;
    verdict.all_matches.push_back(id);
    if (!verdict.matched) {
      verdict.matched = id;
      verdict.witness = std::move(spec);
    }
  }
  if (!verdict.matched && probe) verdict.rainbow_copy = first_rainbow_copy(c, *probe);
  return verdict;
}

bool equal_up_to_relabeling(const EdgeColoring& a, const EdgeColoring& b) {
  return a.host == b.host && a.k == b.k &&
         first_occurrence_relabel(a.colors) == first_occurrence_relabel(b.colors);
}

}  // namespace gallai
