#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "graycode/code.hpp"
#include "graycode/verify.hpp"

namespace graycode::oracle {

/// A small undirected graph whose Hamilton paths or cycles are Gray codes.
struct InstanceGraph {
  std::vector<std::vector<std::size_t>> adjacency;  // sorted, symmetric
  std::optional<std::size_t> start;
  std::optional<std::size_t> end;
  /// Extra pruning rule: may `candidate` be appended to `path`?
  std::function<bool(std::span<const std::size_t> path, std::size_t candidate)> admissible;

  std::size_t vertex_count() const { return adjacency.size(); }
};

/// Vertices are the words of `vertices`; edges join words at unit distance.
InstanceGraph graph_from_words(const Code& vertices, Metric metric);

/// Restricts which vertex may sit at which index: a word and its partner must
/// be placed at an allowed separation in a code of `vertices.size()` words.
std::function<bool(std::span<const std::size_t>, std::size_t)> pairing_constraint(
    const Code& vertices, const Pairing& pairing, bool cyclic);

enum class SearchMode { Path, Cycle };

enum class SearchStatus {
  Found,
  Exhausted,  // every branch explored: no such path/cycle exists
  Unknown,    // budget hit before a verdict
};

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::vector<std::size_t> path;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kDefaultVertexBound = 5000;

/// Depth-first Hamilton search with degree-ascending expansion and
/// forced-vertex pruning. Ties break by vertex index, so results are
/// reproducible. Throws InvalidArgument above `vertex_bound` vertices.
SearchResult hamilton_search(const InstanceGraph& g, SearchMode mode,
                             std::uint64_t node_budget = 20'000'000,
                             std::size_t vertex_bound = kDefaultVertexBound);

/// Materializes a witness as a Code over the graph's vertex words.
Code witness_code(const Code& vertices, std::span<const std::size_t> path, bool cyclic);

/// 2-colours a graph; nullopt when it has an odd cycle.
std::optional<std::vector<int>> two_coloring(const InstanceGraph& g);

/// The torus C_q^n (Lee unit steps over Z_q^n).
InstanceGraph torus(int q, std::size_t n);

/// Exhaustive small-case checks of the existence conditions:
/// no cyclic complementary binary code for n = 3, one for n = 2,
/// C_4 x C_4 x C_4 bipartite and the 0^n / 1^n parity clash for q even, n odd.
Report nonexistence_spot_checks();

}  // namespace graycode::oracle
