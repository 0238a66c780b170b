#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "graycode/code.hpp"
#include "graycode/verify.hpp"

namespace graycode::permutations {

/// Permutations are Words of radix n + 1 holding the symbols 1..n.
Word identity(std::size_t n);
bool is_permutation(WordView w);
std::uint64_t factorial(std::size_t n);

/// Receives one permutation at a time.
using Sink = std::function<void(WordView)>;

/// Plain changes (Steinhaus-Johnson-Trotter) starting at 12...n; symbol n
/// sweeps fastest. Cyclic for n >= 2.
Code sjt(std::size_t n);

/// Completeness, adjacent transposition steps including the wrap,
/// word 0 = 12...n and word(i + n!/2) = reverse(word i).
Report verify_reverse_code(const Code& c);

/// Words n!/2 - 4 .. n!/2 - 1 hold (n-1)(n-2)...312 with n inserted at
/// positions 4, 3, 2, 1. Throws InvalidArgument if `c` is not a reverse code.
bool property_p_check(const Code& c);

/// The four words required before the midpoint by property P.
std::vector<Word> property_p_words(std::size_t n);

/// Vertex of the graph that finishes the 0 mod 4 construction: y = position of
/// n-1, z = position of n (both 1-based), b = 0 iff n-2 precedes n-3.
struct GammaVertex {
  int y = 0;
  int z = 0;
  int b = 0;
  friend bool operator==(const GammaVertex&, const GammaVertex&) = default;
  friend auto operator<=>(const GammaVertex&, const GammaVertex&) = default;
};

class GammaGraph {
 public:
  explicit GammaGraph(int n);

  int n() const { return n_; }
  bool contains(const GammaVertex& v) const;
  bool has_edge(const GammaVertex& u, const GammaVertex& v) const;
  std::vector<GammaVertex> vertices() const;
  std::vector<GammaVertex> neighbors(const GammaVertex& v) const;
  std::size_t vertex_count() const { return static_cast<std::size_t>(2 * n_ * (n_ - 1)); }

 private:
  int n_;
};

/// The graph on (y, z, b); n even >= 2.
GammaGraph gamma_graph(int n);

/// Hamilton path from (n, n-1, 1) to (2, 1, 0). n = 4 returns the pseudo-path
/// that is only valid once embedded in a larger graph.
std::vector<GammaVertex> gamma_path(int n);

Word gamma_vertex_to_permutation(const GammaVertex& v, int n);

/// Reverse code with property P for n = 0 (mod 4), n >= 8.
Code thm_0mod4(std::size_t n);
/// Reverse code for n = 1 (mod 4), n >= 5.
Code thm_1mod4(std::size_t n);
/// Reverse adjacent-interchange code: sjt for n <= 4, otherwise the 0/1 mod 4
/// constructions; n = 2, 3 (mod 4), n >= 5 throws NonexistenceError.
Code reverse_perm_code(std::size_t n);

/// Streams the first n!/2 words of reverse_perm_code(n) without storing them.
void stream_reverse_first_half(std::size_t n, const Sink& sink);

/// Streaming reverse-code verification: checks that the generated first half
/// starts at 12...n, steps by adjacent transpositions, contains every
/// permutation with 1 before 2 exactly once and ends next to n...21. The
/// second half is the mirror image, so this certifies the whole code.
Report verify_reverse_stream(std::size_t n);

/// Cyclic adjacent-transposition code of the arrangements of {1, 2, 3^(n-2)};
/// n odd >= 3. Entry (y, z) places 1 at y and 2 at z.
Code multiset_cycle(std::size_t n);
std::vector<std::pair<int, int>> multiset_cycle_positions(std::size_t n);

}  // namespace graycode::permutations
