#include "cycgraph/graphs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "cycgraph/errors.hpp"

namespace cycgraph {

const char* to_string(GraphKind k) {
  return k == GraphKind::Cyclic ? "cyclic" : "commuting";
}

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::BruteForce: return "brute-force";
    case CountMethod::Formula: return "formula";
    case CountMethod::Structured: return "structured";
  }
  return "?";
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t x) {
  std::uint32_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::uint32_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

void UnionFind::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
}

namespace {

void check_vertex(const EnumeratedGroup& G, std::size_t i, const char* who) {
  if (i >= G.order()) throw NotAMemberError(std::string(who) + ": index out of range");
  if (i == G.identity_index())
    throw std::invalid_argument(std::string(who) + ": the identity is not a vertex");
}

// Closure of {x, y} under composition, as raw permutations; cyclic iff some
// element's order equals the closure size.
bool generates_cyclic(const Permutation& x, const Permutation& y) {
  std::vector<Permutation> pool{Permutation::identity(x.degree())};
  std::vector<Point> buf;
  const Permutation* gens[2] = {&x, &y};
  for (std::size_t head = 0; head < pool.size(); ++head) {
    for (const Permutation* g : gens) {
      compose_into(pool[head], *g, buf);
      auto p = Permutation::unchecked(std::vector<Point>(buf));
      if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(std::move(p));
    }
  }
  for (const auto& p : pool)
    if (element_order(p) == pool.size()) return true;
  return false;
}

}  // namespace

bool cyclic_adjacent(const EnumeratedGroup& G, std::size_t x_index, std::size_t y_index) {
  check_vertex(G, x_index, "cyclic_adjacent");
  check_vertex(G, y_index, "cyclic_adjacent");
  if (x_index == y_index)
    throw std::invalid_argument("cyclic_adjacent: vertices must be distinct");

  const Permutation& x = G.element(x_index);
  const Permutation& y = G.element(y_index);
  if (!commutes(x, y)) return false;
  if (std::gcd(element_order(x), element_order(y)) == 1) return true;
  return generates_cyclic(x, y);
}

namespace {

ComponentReport report_from_union_find(UnionFind& uf, const std::vector<std::uint32_t>& vertices,
                                       GraphKind kind) {
  std::map<std::uint32_t, std::uint64_t> size_of_root;
  for (std::uint32_t v : vertices) ++size_of_root[uf.find(v)];

  ComponentReport report;
  report.graph_kind = kind;
  report.method = CountMethod::BruteForce;
  report.vertex_count = vertices.size();
  report.component_count = size_of_root.size();
  report.component_sizes.reserve(size_of_root.size());
  for (const auto& [root, size] : size_of_root) report.component_sizes.push_back(size);
  std::sort(report.component_sizes.begin(), report.component_sizes.end());
  return report;
}

}  // namespace

DeltaComponents delta_components_with_forest(const EnumeratedGroup& G) {
  const std::size_t n = G.order();
  UnionFind uf(n);
  std::vector<std::uint32_t> vertices;
  vertices.reserve(n - 1);

  for (std::size_t i = 1; i < n; ++i) {
    vertices.push_back(static_cast<std::uint32_t>(i));
    // Union i with each nontrivial power of element(i).
    std::size_t j = G.compose_index(i, i);
    while (j != G.identity_index()) {
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      j = G.compose_index(j, i);
    }
  }
  auto report = report_from_union_find(uf, vertices, GraphKind::Cyclic);
  return DeltaComponents{std::move(report), std::move(uf)};
}

ComponentReport delta_components(const EnumeratedGroup& G) {
  return delta_components_with_forest(G).report;
}

ComponentReport gamma_components(const EnumeratedGroup& G, std::uint64_t pair_cap) {
  auto center = center_indices(G);
  if (center.size() == G.order())
    throw EmptyVertexSetError("gamma_components: commuting graph undefined for abelian groups");

  std::vector<std::uint32_t> vertices;
  vertices.reserve(G.order() - center.size());
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < G.order(); ++i) {
      if (c < center.size() && center[c] == i) {
        ++c;
      } else {
        vertices.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  const std::uint64_t v = vertices.size();
  if (v * v > pair_cap)
    throw CapExceededError("gamma_components: pairwise scan larger than pair cap",
                           static_cast<std::size_t>(pair_cap));

  UnionFind uf(G.order());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (commutes(G.element(vertices[a]), G.element(vertices[b])))
        uf.unite(vertices[a], vertices[b]);
  return report_from_union_find(uf, vertices, GraphKind::Commuting);
}

std::optional<std::uint64_t> delta_distance(const EnumeratedGroup& G, std::size_t x_index,
                                            std::size_t y_index) {
  check_vertex(G, x_index, "delta_distance");
  check_vertex(G, y_index, "delta_distance");
  if (x_index == y_index) return 0;

  const std::size_t n = G.order();
  std::vector<std::uint64_t> dist(n, std::numeric_limits<std::uint64_t>::max());
  std::queue<std::size_t> frontier;
  dist[x_index] = 0;
  frontier.push(x_index);
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t u = 1; u < n; ++u) {
      if (u == v || dist[u] != std::numeric_limits<std::uint64_t>::max()) continue;
      if (!cyclic_adjacent(G, v, u)) continue;
      dist[u] = dist[v] + 1;
      if (u == y_index) return dist[u];
      frontier.push(u);
    }
  }
  return std::nullopt;
}

std::string export_dot(const EnumeratedGroup& G, GraphKind kind, bool labels,
                       std::uint64_t pair_cap) {
  std::vector<std::uint32_t> vertices;
  if (kind == GraphKind::Cyclic) {
    for (std::size_t i = 1; i < G.order(); ++i) vertices.push_back(static_cast<std::uint32_t>(i));
  } else {
    auto center = center_indices(G);
    if (center.size() == G.order())
      throw EmptyVertexSetError("export_dot: commuting graph undefined for abelian groups");
    std::size_t c = 0;
    for (std::size_t i = 0; i < G.order(); ++i) {
      if (c < center.size() && center[c] == i)
        ++c;
      else
        vertices.push_back(static_cast<std::uint32_t>(i));
    }
  }

  const std::uint64_t v = vertices.size();
  if (v * v > pair_cap)
    throw CapExceededError("export_dot: pairwise scan larger than pair cap",
                           static_cast<std::size_t>(pair_cap));

  std::ostringstream out;
  out << "graph " << to_string(kind) << " {\n";
  for (std::uint32_t i : vertices) {
    out << "  v" << i;
    if (labels) out << " [label=\"" << G.element(i).cycle_string() << "\"]";
    out << ";\n";
  }
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      bool adjacent = kind == GraphKind::Cyclic
                          ? cyclic_adjacent(G, vertices[a], vertices[b])
                          : commutes(G.element(vertices[a]), G.element(vertices[b]));
      if (adjacent) out << "  v" << vertices[a] << " -- v" << vertices[b] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cycgraph
