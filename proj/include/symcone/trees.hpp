#pragma once

#include <symcone/combinat.hpp>
#include <symcone/sectors.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symcone {

struct TreeEdge {
  int u = 0;
  int v = 0;
  BigRational q;
  Multipartition mon_u; // flag monodromy at (u, e)
  Multipartition mon_v; // flag monodromy at (v, e)
};

struct TreeMark {
  int vertex = 0;
  Multipartition mon;
};

/// Decorated genus-zero tree. Vertex and edge ids are arbitrary integers;
/// marks are b_1..b_n in order.
struct DecoratedTree {
  int d = 1;
  int r = 0;
  std::map<int, OrderedZeroPartition> vertices; // VEval
  std::map<int, TreeEdge> edges;
  std::vector<TreeMark> marks;

  std::vector<int> edges_at(int vertex) const;
  std::vector<int> marks_at(int vertex) const;
  int valence(int vertex) const { return static_cast<int>(edges_at(vertex).size()); }
  /// Other endpoint; throws BadEdge when `vertex` is not on the edge.
  int other_end(int edge, int vertex) const;
  const Multipartition &flag_mon(int vertex, int edge) const;
  /// Coordinate at which VEval(vertex) exceeds VEval(neighbour).
  int i_mov(int vertex, int edge) const;
  Partition mov(int edge) const;
  Partition mon_of_edge(int edge) const;
  BigRational beta(int edge) const;
  BigRational total_beta() const;
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> failures; // "condition: detail"
};

ValidationReport validate(const DecoratedTree &t);

/// Throws BadEdge for unknown edges.
bool combinable(const DecoratedTree &t, int e1, int e2);

/// Unordered pairs (smaller id first) of combinable edges.
std::vector<std::pair<int, int>> combinable_pairs(const DecoratedTree &t);

struct CombineResult {
  DecoratedTree tree;
  std::map<int, int> phi; // old edge id -> new edge id
};

/// The combined edge keeps the smaller of the two ids.
/// Throws NotCombinable.
CombineResult combine(const DecoratedTree &t, int e1, int e2);

/// Combines the pairs in the given order, translating later pairs through
/// the edge maps. Throws NotCombinable if a pair is not in P(t).
CombineResult combine_set(const DecoratedTree &t,
                          const std::vector<std::pair<int, int>> &pairs);

/// Combines every combinable pair. Throws Invalid on invalid input.
DecoratedTree minimal_form(const DecoratedTree &t);

/// Isomorphism-invariant encoding: rooted at the vertex of b_1, or the least
/// encoding over all roots when there are no marks.
std::string canonical_form(const DecoratedTree &t);

/// The tree of a one-edge class: base vertex 0 carries b_1, target vertex 1
/// carries b_2.
DecoratedTree tree_from_edge(const EdgeClass &e);

/// One move of a chain: parts `mov` go from coordinate `from` to `to`.
struct ChainStep {
  int from = 0;
  int to = 1;
  Partition mov;
  BigRational q;
};

/// Chain v_0 - ... - v_k starting at sector `start`, with b_1 at v_0 and b_2
/// at v_k. Throws ShapeMismatch / BadEdge for impossible steps.
DecoratedTree make_chain(const FixedSector &start,
                         const std::vector<ChainStep> &steps);

/// Random valid chain with up to `max_edges` edges, biased towards
/// combinable neighbours.
DecoratedTree random_chain(int d, int r, int max_edges, std::uint64_t seed);

/// All trees with n marks and total beta, up to isomorphism, for
/// d <= 2, r <= 1, n <= 2, beta <= 1. Throws CapExceeded outside that range.
std::vector<DecoratedTree> enumerate_trees(int d, int r, int n, int beta);

} // namespace symcone
