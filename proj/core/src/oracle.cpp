#include "graycode/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "graycode/error.hpp"
#include "graycode/transform.hpp"

namespace graycode::oracle {

namespace {

class Search {
 public:
  Search(const InstanceGraph& g, SearchMode mode, std::uint64_t budget)
      : g_(g), mode_(mode), budget_(budget), visited_(g.vertex_count(), false) {}

  SearchResult run() {
    SearchResult result;
    const std::size_t n = g_.vertex_count();
    if (n == 0) {
      result.status = SearchStatus::Exhausted;
      return result;
    }
    std::vector<std::size_t> starts;
    if (g_.start) {
      starts.push_back(*g_.start);
    } else if (mode_ == SearchMode::Cycle) {
      starts.push_back(0);  // cycles are rotation invariant
    } else {
      for (std::size_t v = 0; v < n; ++v) starts.push_back(v);
    }
    try {
      for (std::size_t s : starts) {
        if (g_.end && *g_.end == s && n > 1) continue;
        if (g_.admissible && !g_.admissible(path_, s)) continue;
        start_ = s;
        enter(s);
        if (extend()) {
          result.status = SearchStatus::Found;
          result.path = path_;
          result.nodes = nodes_;
          return result;
        }
        leave();
      }
      result.status = SearchStatus::Exhausted;
    } catch (const BudgetHit&) {
      result.status = SearchStatus::Unknown;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  struct BudgetHit {};

  void enter(std::size_t v) {
    visited_[v] = true;
    path_.push_back(v);
  }
  void leave() {
    visited_[path_.back()] = false;
    path_.pop_back();
  }

  bool adjacent(std::size_t a, std::size_t b) const {
    const auto& adj = g_.adjacency[a];
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  std::size_t free_degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u : g_.adjacency[v]) d += !visited_[u];
    return d;
  }

  // Every unvisited vertex needs enough usable neighbours to be threaded
  // into the rest of the walk, which continues from `head`.
  bool feasible(std::size_t head) const {
    const std::size_t n = g_.vertex_count();
    if (path_.size() == n) return true;
    std::size_t weak = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (visited_[x]) continue;
      std::size_t links = free_degree(x) + adjacent(x, head);
      if (mode_ == SearchMode::Cycle && adjacent(x, start_) && start_ != head) ++links;
      if (links == 0) return false;
      if (links == 1) {
        if (mode_ == SearchMode::Cycle) return false;
        if (g_.end && *g_.end != x) return false;
        if (++weak > 1) return false;
      }
    }
    if (mode_ == SearchMode::Cycle && start_ != head && free_degree(start_) == 0) return false;
    return true;
  }

  bool extend() {
    const std::size_t n = g_.vertex_count();
    const std::size_t head = path_.back();
    if (path_.size() == n) {
      if (g_.end && head != *g_.end) return false;
      return mode_ == SearchMode::Path || n == 1 || adjacent(head, start_);
    }
    if (++nodes_ > budget_) throw BudgetHit{};
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    for (std::size_t v : g_.adjacency[head]) {
      if (visited_[v]) continue;
      if (g_.end && v == *g_.end && path_.size() + 1 != n) continue;
      if (g_.admissible && !g_.admissible(path_, v)) continue;
      cands.emplace_back(free_degree(v), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [deg, v] : cands) {
      enter(v);
      if (feasible(v) && extend()) return true;
      leave();
    }
    return false;
  }

  const InstanceGraph& g_;
  SearchMode mode_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t start_ = 0;
  std::vector<bool> visited_;
  std::vector<std::size_t> path_;
};

bool contains(const std::set<std::int64_t>& s, std::int64_t v) { return s.find(v) != s.end(); }

}  // namespace

InstanceGraph graph_from_words(const Code& vertices, Metric metric) {
  if (vertices.size() > kDefaultVertexBound) {
    throw InvalidArgument("instance graph limited to " + std::to_string(kDefaultVertexBound) +
                          " vertices");
  }
  InstanceGraph g;
  g.adjacency.resize(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (is_unit_step(metric, vertices[a], vertices[b], vertices.radix())) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
      }
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

std::function<bool(std::span<const std::size_t>, std::size_t)> pairing_constraint(
    const Code& vertices, const Pairing& pairing, bool cyclic) {
  const std::size_t n = vertices.size();
  std::map<std::vector<Digit>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[{vertices[i].begin(), vertices[i].end()}] = i;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(n, kNone);
  std::vector<std::vector<std::size_t>> sources(n);  // x with partner[x] == v
  for (std::size_t i = 0; i < n; ++i) {
    const Word p = paired_word(pairing, vertices[i], vertices.radix());
    auto it = index.find({p.begin(), p.end()});
    if (it != index.end()) {
      partner[i] = it->second;
      sources[it->second].push_back(i);
    }
  }
  const auto total = static_cast<std::int64_t>(n);
  auto sep = [cyclic, total](std::int64_t from, std::int64_t to) {
    if (cyclic) return ((to - from) % total + total) % total;
    return to > from ? to - from : from - to;
  };
  const std::set<std::int64_t> allowed = pairing.separations;
  // Can a vertex placed at `fixed` still be matched by one placed later?
  auto reachable_later = [=](std::int64_t fixed, std::int64_t now, bool fixed_is_source) {
    for (std::int64_t s : allowed) {
      for (std::int64_t k = now + 1; k < total; ++k) {
        const std::int64_t d = fixed_is_source ? sep(fixed, k) : sep(k, fixed);
        if (d == s) return true;
      }
    }
    return false;
  };
  return [=](std::span<const std::size_t> path, std::size_t v) {
    if (partner[v] == kNone) return false;
    const auto i = static_cast<std::int64_t>(path.size());
    auto position = [&](std::size_t x) -> std::int64_t {
      if (x == v) return i;
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (path[k] == x) return static_cast<std::int64_t>(k);
      }
      return -1;
    };
    const std::int64_t pj = position(partner[v]);
    if (pj >= 0) {
      if (!contains(allowed, sep(i, pj))) return false;
    } else if (!reachable_later(i, i, true)) {
      return false;
    }
    for (std::size_t x : sources[v]) {
      const std::int64_t xj = position(x);
      if (xj >= 0) {
        if (!contains(allowed, sep(xj, i))) return false;
      } else if (!reachable_later(i, i, false)) {
        return false;
      }
    }
    return true;
  };
}

SearchResult hamilton_search(const InstanceGraph& g, SearchMode mode, std::uint64_t node_budget,
                             std::size_t vertex_bound) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_bound) {
    throw InvalidArgument("instance graph has " + std::to_string(n) + " vertices, bound is " +
                          std::to_string(vertex_bound));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : g.adjacency[a]) {
      if (b >= n) throw InvalidArgument("adjacency refers to a missing vertex");
    }
  }
  if ((g.start && *g.start >= n) || (g.end && *g.end >= n)) {
    throw InvalidArgument("anchor is not a vertex");
  }
  if (mode == SearchMode::Cycle && g.end) {
    throw InvalidArgument("cycle search takes no end anchor");
  }
  return Search(g, mode, node_budget).run();
}

Code witness_code(const Code& vertices, std::span<const std::size_t> path, bool cyclic) {
  Code c(vertices.radix(), vertices.length(), cyclic);
  c.reserve(path.size());
  for (std::size_t v : path) c.push_back_unchecked(vertices.at(v));
  return c;
}

std::optional<std::vector<int>> two_coloring(const InstanceGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : g.adjacency[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

InstanceGraph torus(int q, std::size_t n) {
  const Universe all = Universe::all(q, n);
  const std::size_t size = all.size();
  if (size > 1'000'000) throw InvalidArgument("torus too large");
  InstanceGraph g;
  g.adjacency.resize(size);
  std::vector<std::size_t> place(n);
  std::size_t w = 1;
  for (std::size_t p = n; p-- > 0;) {
    place[p] = w;
    w *= static_cast<std::size_t>(q);
  }
  for (std::size_t v = 0; v < size; ++v) {
    const WordView word = all.words()[v];
    auto& adj = g.adjacency[v];
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t d = word[p];
      const std::size_t up = (d + 1) % static_cast<std::size_t>(q);
      const std::size_t down = (d + static_cast<std::size_t>(q) - 1) % static_cast<std::size_t>(q);
      adj.push_back(v - d * place[p] + up * place[p]);
      adj.push_back(v - d * place[p] + down * place[p]);
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

Report nonexistence_spot_checks() {
  Report r;
  auto complementary = [](std::size_t n) {
    const Code cube = Universe::all(2, n).words();
    InstanceGraph g = graph_from_words(cube, Metric::Hamming);
    Pairing p;
    p.rule = PairingRule::Complement;
    p.separations = {static_cast<std::int64_t>(cube.size() / 2)};
    g.admissible = pairing_constraint(cube, p, true);
    return std::make_pair(hamilton_search(g, SearchMode::Cycle), cube);
  };

  if (auto [res, cube] = complementary(3); res.status != SearchStatus::Exhausted) {
    r.add({"complementary-n3", std::nullopt, std::nullopt,
           res.status == SearchStatus::Found ? "a complementary 3-bit cycle was found"
                                             : "search budget exhausted without a verdict"});
  }
  if (auto [res, cube] = complementary(2); res.status != SearchStatus::Found) {
    r.add({"complementary-n2", std::nullopt, std::nullopt, "no complementary 2-bit cycle found"});
  } else {
    CodeSpec spec;
    spec.require_cyclic = true;
    spec.universe = Universe(cube);
    spec.pairing = Pairing{PairingRule::Complement, 1, {2}};
    if (!verify_code(witness_code(cube, res.path, true), spec).pass) {
      r.add({"complementary-n2", std::nullopt, std::nullopt, "witness rejected by the verifier"});
    }
  }

  const InstanceGraph c4 = torus(4, 3);
  const auto colors = two_coloring(c4);
  if (!colors) {
    r.add({"bipartite-c4^3", std::nullopt, std::nullopt, "C4^3 has an odd cycle"});
  } else {
    // In a bipartite Hamilton cycle colours alternate, so a word and its
    // diagonal partner (opposite colours) sit an odd distance apart, never 16.
    const Code words = Universe::all(4, 3).words();
    std::map<std::vector<Digit>, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[{words[i].begin(), words[i].end()}] = i;
    std::size_t same = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Word p = add_diagonal(words.word(i), 1);
      same += (*colors)[i] == (*colors)[index.at({p.begin(), p.end()})];
    }
    if (same != 0) {
      r.add({"parity-clash", std::nullopt, std::nullopt,
             std::to_string(same) + " words share a colour with their diagonal partner"});
    }
  }
  return r;
}

}  // namespace graycode::oracle
