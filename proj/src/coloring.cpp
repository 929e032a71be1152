#include "gallai/coloring.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "gallai/error.hpp"

namespace gallai {

std::vector<std::string> validate(const EdgeColoring& c) {
  std::vector<std::string> problems;
  const int m = c.host.edge_count();
  if (static_cast<int>(c.colors.size()) != m) {
    problems.push_back("color list length " + std::to_string(c.colors.size()) +
                       " differs from edge count " + std::to_string(m) + " of " +
                       c.host.descriptor());
  }
  if (c.k < 1) problems.push_back("k must be positive, got " + std::to_string(c.k));
  if (c.k > m) {
    problems.push_back("k = " + std::to_string(c.k) + " exceeds edge count " + std::to_string(m));
  }
  std::vector<bool> used(static_cast<std::size_t>(std::max(c.k, 0)) + 1, false);
  for (std::size_t e = 0; e < c.colors.size(); ++e) {
    const int color = c.colors[e];
    if (color < 1 || color > c.k) {
      problems.push_back("edge " + std::to_string(e) + " has color " + std::to_string(color) +
                         " outside 1.." + std::to_string(c.k));
    } else {
      used[color] = true;
    }
  }
  for (int color = 1; color <= c.k; ++color) {
    if (!used[color]) problems.push_back("color " + std::to_string(color) + " unused");
  }
  return problems;
}

void require_valid(const EdgeColoring& c) {
  const auto problems = validate(c);
  if (problems.empty()) return;
  std::string message = "invalid coloring:";
  for (const auto& p : problems) message += " " + p + ";";
  message.pop_back();
  throw ValidationError(message);
}

ClassProfile normalize_profile(std::vector<int> sizes) {
  for (int s : sizes) {
    if (s < 1) throw ValidationError("profile class sizes must be positive");
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

ClassProfile profile_of(const EdgeColoring& c) {
  std::vector<int> sizes(c.k, 0);
  for (int color : c.colors) ++sizes[color - 1];
  return normalize_profile(std::move(sizes));
}

std::vector<ClassProfile> profiles_for(int m, int k) {
  std::vector<ClassProfile> out;
  if (k < 1 || k > m) return out;
  ClassProfile current;
  std::function<void(int, int, int)> build = [&](int left, int parts, int cap) {
    if (parts == 0) {
      if (left == 0) out.push_back(current);
      return;
    }
    // Remaining parts each need at least one edge.
    for (int s = std::min(cap, left - (parts - 1)); s >= 1; --s) {
      if (s * parts < left) break;
      current.push_back(s);
      build(left - s, parts - 1, s);
      current.pop_back();
    }
  };
  build(m, k, m);
  return out;
}

BigCount labeled_partition_count(int m, const ClassProfile& profile) {
  BigCount count = factorial(m);
  std::size_t i = 0;
  while (i < profile.size()) {
    std::size_t j = i;
    while (j < profile.size() && profile[j] == profile[i]) ++j;
    for (std::size_t r = i; r < j; ++r) count /= factorial(profile[r]);
    count /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return count;
}

std::vector<int> first_occurrence_relabel(std::span<const int> colors) {
  std::vector<int> out(colors.size());
  std::vector<int> label;
  int next = 0;
  for (std::size_t e = 0; e < colors.size(); ++e) {
    const int c = colors[e];
    if (c < 0) throw ValidationError("negative color label");
    if (c >= static_cast<int>(label.size())) label.resize(c + 1, 0);
    if (label[c] == 0) label[c] = ++next;
    out[e] = label[c];
  }
  return out;
}

EdgeColoring apply_automorphism(const EdgeColoring& c, const Permutation& p) {
  const auto image = induced_edge_permutation(c.host, p);
  EdgeColoring out{c.host, c.k, std::vector<int>(c.colors.size())};
  for (std::size_t e = 0; e < c.colors.size(); ++e) out.colors[image[e]] = c.colors[e];
  return out;
}

EdgeColoring relabel_colors(const EdgeColoring& c, const std::vector<int>& relabel) {
  if (static_cast<int>(relabel.size()) != c.k) {
    throw ValidationError("color relabeling must list exactly k colors");
  }
  std::vector<int> check = relabel;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < c.k; ++i) {
    if (check[i] != i + 1) throw ValidationError("color relabeling is not a permutation of 1..k");
  }
  EdgeColoring out = c;
  for (int& color : out.colors) color = relabel[color - 1];
  return out;
}

HostSymmetry::HostSymmetry(const HostGraph& host) : host_(host), m_(host.edge_count()) {
  if (m_ > 255) throw GuardError("symmetry guard: more than 255 edges");
  const auto group = host_automorphisms(host);
  count_ = group.size();
  inverse_.resize(count_ * static_cast<std::size_t>(m_));
  for (std::size_t g = 0; g < count_; ++g) {
    const auto image = induced_edge_permutation(host, group[g]);
    for (int e = 0; e < m_; ++e) {
      inverse_[g * m_ + image[e]] = static_cast<std::uint8_t>(e);
    }
  }
}

EdgeColoring canonicalize(const EdgeColoring& c) { return canonicalize(c, HostSymmetry(c.host)); }

EdgeColoring canonicalize(const EdgeColoring& c, const HostSymmetry& symmetry) {
  require_valid(c);
  if (!(symmetry.host() == c.host)) throw ValidationError("symmetry belongs to a different host");
  const std::size_t m = c.colors.size();
  std::vector<int> best = first_occurrence_relabel(c.colors);
  std::vector<int> label(c.k + 1);
  std::vector<int> candidate(m);
  for (std::size_t g = 1; g < symmetry.size(); ++g) {
    const auto inv = symmetry.inverse(g);
    std::fill(label.begin(), label.end(), 0);
    int next = 0;
    bool smaller = false;
    bool decided = false;
    for (std::size_t e = 0; e < m; ++e) {
      int& l = label[c.colors[inv[e]]];
      if (l == 0) l = ++next;
      candidate[e] = l;
      if (!decided && l != best[e]) {
        decided = true;
        smaller = l < best[e];
        if (!smaller) break;
      }
    }
    if (smaller) best = candidate;
  }
  return EdgeColoring{c.host, c.k, std::move(best)};
}

void check_enumeration(const HostGraph& host, int k, const std::optional<ClassProfile>& profile) {
  const int m = host.edge_count();
  if (k < 1 || k > m) {
    throw ValidationError("k = " + std::to_string(k) + " outside 1.." + std::to_string(m) +
                          " for " + host.descriptor());
  }
  if (profile) {
    const ClassProfile p = normalize_profile(*profile);
    int sum = 0;
    for (int s : p) sum += s;
    if (static_cast<int>(p.size()) != k || sum != m) {
      throw ValidationError("infeasible profile: need " + std::to_string(k) +
                            " classes summing to " + std::to_string(m));
    }
  }
  const bool near_rainbow = m - k <= 2;
  const int n = host.n();
  if (host.is_bipartite()) {
    const int limit = near_rainbow ? kMaxEnumerationBipartiteNearRainbow : kMaxEnumerationBipartite;
    if (n > limit) {
      throw GuardError("enumeration guard: K_{n,n} limited to n <= " + std::to_string(limit) +
                       " at k = " + std::to_string(k) + ", got n = " + std::to_string(n));
    }
  } else {
    const int limit = near_rainbow ? kMaxEnumerationCompleteNearRainbow : kMaxEnumerationComplete;
    if (n > limit) {
      throw GuardError("enumeration guard: K_n limited to n <= " + std::to_string(limit) +
                       " at k = " + std::to_string(k) + ", got n = " + std::to_string(n));
    }
  }
  const BigCount work = profile ? labeled_partition_count(m, normalize_profile(*profile))
                                : stirling2(m, k);
  if (work > kEnumerationBudget) {
    throw GuardError("enumeration guard: " + to_decimal(work) +
                     " color-class partitions exceed the budget of " +
                     std::to_string(kEnumerationBudget));
  }
}

namespace {

constexpr std::uint8_t kUnassigned = 0xFF;
constexpr std::size_t kRefuterCache = 16;

// First block of a partition: the class containing edge 0.
struct Task {
  std::size_t profile;
  int size;
  std::vector<int> companions;
};

class Enumerator {
 public:
  Enumerator(const HostSymmetry& symmetry, int k, std::vector<ColoringClass>& out)
      : symmetry_(symmetry),
        m_(symmetry.host().edge_count()),
        k_(k),
        out_(out),
        rgs_(m_, kUnassigned),
        stamp_(m_, 0),
        map_(m_, 0),
        k_factorial_(factorial(k)) {}

  void run(const ClassProfile& profile, const Task& task) {
    sizes_.clear();
    remaining_.clear();
    for (int s : profile) {
      if (sizes_.empty() || sizes_.back() != s) {
        sizes_.push_back(s);
        remaining_.push_back(0);
      }
      ++remaining_.back();
    }
    const auto at = std::find(sizes_.begin(), sizes_.end(), task.size) - sizes_.begin();
    --remaining_[at];
    std::fill(rgs_.begin(), rgs_.end(), kUnassigned);
    rgs_[0] = 0;
    for (int e : task.companions) rgs_[e] = 0;
    extend(1, 1);
  }

 private:
  void extend(int next_label, int from) {
    int e = from;
    while (e < m_ && rgs_[e] != kUnassigned) ++e;
    if (e == m_) {
      if (next_label == k_) emit();
      return;
    }
    for (std::size_t si = 0; si < sizes_.size(); ++si) {
      if (remaining_[si] == 0) continue;
      --remaining_[si];
      rgs_[e] = static_cast<std::uint8_t>(next_label);
      pick(next_label, e, e + 1, sizes_[si] - 1);
      rgs_[e] = kUnassigned;
      ++remaining_[si];
    }
  }

  void pick(int label, int head, int start, int left) {
    if (left == 0) {
      extend(label + 1, head + 1);
      return;
    }
    for (int f = start; f < m_; ++f) {
      if (rgs_[f] != kUnassigned) continue;
      rgs_[f] = static_cast<std::uint8_t>(label);
      pick(label, head, f + 1, left - 1);
      rgs_[f] = kUnassigned;
    }
  }

  // Sign of RGS(g(P)) compared with RGS(P).
  int compare(std::span<const std::uint8_t> inv) {
    ++epoch_;
    std::uint8_t next = 0;
    for (int e = 0; e < m_; ++e) {
      const std::uint8_t c = rgs_[inv[e]];
      if (stamp_[c] != epoch_) {
        stamp_[c] = epoch_;
        map_[c] = next++;
      }
      const std::uint8_t d = map_[c];
      if (d != rgs_[e]) return d < rgs_[e] ? -1 : 1;
    }
    return 0;
  }

  void emit() {
    for (std::size_t i = 0; i < refuters_.size(); ++i) {
      if (compare(symmetry_.inverse(refuters_[i])) < 0) {
        std::rotate(refuters_.begin(), refuters_.begin() + static_cast<std::ptrdiff_t>(i),
                    refuters_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        return;
      }
    }
    std::uint64_t stabilizer = 0;
    for (std::size_t g = 0; g < symmetry_.size(); ++g) {
      const int r = compare(symmetry_.inverse(g));
      if (r < 0) {
        refuters_.insert(refuters_.begin(), g);
        if (refuters_.size() > kRefuterCache) refuters_.pop_back();
        return;
      }
      if (r == 0) ++stabilizer;
    }
    ColoringClass cls{EdgeColoring{symmetry_.host(), k_, std::vector<int>(m_)}, 0, stabilizer, 0};
    for (int e = 0; e < m_; ++e) cls.representative.colors[e] = rgs_[e] + 1;
    cls.partition_orbit = symmetry_.size() / stabilizer;
    cls.orbit_size = k_factorial_ * cls.partition_orbit;
    out_.push_back(std::move(cls));
  }

  const HostSymmetry& symmetry_;
  int m_;
  int k_;
  std::vector<ColoringClass>& out_;
  std::vector<std::uint8_t> rgs_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> map_;
  std::uint32_t epoch_ = 0;
  std::vector<int> sizes_;
  std::vector<int> remaining_;
  std::vector<std::size_t> refuters_;
  BigCount k_factorial_;
};

std::vector<Task> first_blocks(const std::vector<ClassProfile>& profiles, int m) {
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
    const auto& p = profiles[pi];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0 && p[i] == p[i - 1]) continue;
      const int s = p[i];
      std::vector<int> chosen;
      std::function<void(int)> choose = [&](int start) {
        if (static_cast<int>(chosen.size()) == s - 1) {
          tasks.push_back({pi, s, chosen});
          return;
        }
        for (int f = start; f < m; ++f) {
          chosen.push_back(f);
          choose(f + 1);
          chosen.pop_back();
        }
      };
      choose(1);
    }
  }
  return tasks;
}

}  // namespace

std::vector<ColoringClass> enumerate_exact_colorings(const HostGraph& host, int k,
                                                     const EnumerationOptions& options) {
  check_enumeration(host, k, options.profile);
  return enumerate_exact_colorings(HostSymmetry(host), k, options);
}

std::vector<ColoringClass> enumerate_exact_colorings(const HostSymmetry& symmetry, int k,
                                                     const EnumerationOptions& options) {
  const HostGraph& host = symmetry.host();
  check_enumeration(host, k, options.profile);
  const int m = host.edge_count();
  const std::vector<ClassProfile> profiles =
      options.profile ? std::vector<ClassProfile>{normalize_profile(*options.profile)}
                      : profiles_for(m, k);
  const std::vector<Task> tasks = first_blocks(profiles, m);

  const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(tasks.size())));
  std::vector<std::vector<ColoringClass>> partial(workers);
  auto work = [&](int w) {
    Enumerator enumerator(symmetry, k, partial[w]);
    for (std::size_t i = w; i < tasks.size(); i += workers) {
      enumerator.run(profiles[tasks[i].profile], tasks[i]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<ColoringClass> out;
  for (auto& part : partial) {
    for (auto& cls : part) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ColoringClass& a, const ColoringClass& b) {
    return a.representative.colors < b.representative.colors;
  });
  return out;
}

}  // namespace gallai
