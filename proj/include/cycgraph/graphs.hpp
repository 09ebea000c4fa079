#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycgraph/group.hpp"

namespace cycgraph {

inline constexpr std::uint64_t kDefaultPairCap = 25'000'000;

enum class GraphKind { Cyclic, Commuting };
enum class CountMethod { BruteForce, Formula, Structured };

const char* to_string(GraphKind k);
const char* to_string(CountMethod m);

/// Connected-component summary for one graph of one group.
struct ComponentReport {
  GraphKind graph_kind;
  CountMethod method;
  std::uint64_t component_count = 0;
  /// Ascending multiset of component sizes; empty for formula results.
  std::vector<std::uint64_t> component_sizes;
  std::uint64_t vertex_count = 0;
};

/// Disjoint-set forest over vertex indices.
class UnionFind {
public:
  explicit UnionFind(std::size_t n);
  std::uint32_t find(std::uint32_t x);
  void unite(std::uint32_t a, std::uint32_t b);

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> rank_;
};

/// True iff <x, y> is cyclic, for distinct nonidentity members x, y of G.
/// Fast paths: non-commuting pairs are never adjacent; commuting elements of
/// coprime orders always are.
bool cyclic_adjacent(const EnumeratedGroup& G, std::size_t x_index, std::size_t y_index);

/// Components of the cyclic graph: vertices are the nonidentity elements,
/// edges join x and y when <x, y> is cyclic.
///
/// Two vertices are in one component exactly when they are linked through
/// cyclic subgroups, and every edge lies inside some <z>, so seeding a
/// union-find with {g ~ g^k : k} over all g produces the same components as
/// pairwise adjacency at O(|G| * max-order) cost instead of O(|G|^2).
ComponentReport delta_components(const EnumeratedGroup& G);

/// Cyclic-graph components keeping the underlying forest, so callers can ask
/// which vertices share a component.
struct DeltaComponents {
  ComponentReport report;
  UnionFind forest;
};
DeltaComponents delta_components_with_forest(const EnumeratedGroup& G);

/// Components of the commuting graph: vertices are the non-central elements,
/// edges join commuting pairs.  Throws EmptyVertexSetError for abelian input
/// and CapExceededError when the pairwise scan would exceed `pair_cap`.
ComponentReport gamma_components(const EnumeratedGroup& G,
                                 std::uint64_t pair_cap = kDefaultPairCap);

/// BFS distance between two nonidentity elements in the cyclic graph;
/// nullopt when they lie in different components.
std::optional<std::uint64_t> delta_distance(const EnumeratedGroup& G, std::size_t x_index,
                                            std::size_t y_index);

/// Deterministic DOT rendering of either graph.  Vertices are named by
/// canonical element index in ascending order; one edge per unordered
/// adjacent pair, ascending.  `labels` adds cycle-notation labels.
std::string export_dot(const EnumeratedGroup& G, GraphKind kind, bool labels,
                       std::uint64_t pair_cap = kDefaultPairCap);

}  // namespace cycgraph
