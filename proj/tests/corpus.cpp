#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cycgraph/graphs.hpp"

namespace cycgraph::corpus {

EnumeratedGroup sym(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> full(n);
    std::iota(full.begin(), full.end(), Point{0});
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  return EnumeratedGroup::enumerate(gens, kDefaultEnumCap, n);
}

EnumeratedGroup cyclic(std::size_t n) {
  std::vector<Point> full(n);
  std::iota(full.begin(), full.end(), Point{0});
  return EnumeratedGroup::enumerate({Permutation::from_cycles(n, {full})});
}

EnumeratedGroup cyclic_semidirect(std::size_t n, std::size_t multiplier) {
  if (std::gcd(n, multiplier) != 1)
    throw std::invalid_argument("cyclic_semidirect: multiplier must be a unit mod n");
  std::vector<Point> add(n), mul(n);
  for (std::size_t x = 0; x < n; ++x) {
    add[x] = static_cast<Point>((x + 1) % n);
    mul[x] = static_cast<Point>((x * multiplier) % n);
  }
  return EnumeratedGroup::enumerate(
      {Permutation(std::move(add)), Permutation(std::move(mul))});
}

EnumeratedGroup dihedral(std::size_t n) { return cyclic_semidirect(n, n - 1); }

EnumeratedGroup direct_product(const EnumeratedGroup& A, const EnumeratedGroup& B) {
  const std::size_t degree = A.degree() + B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < A.degree(); ++i) images[i] = g[static_cast<Point>(i)];
    for (std::size_t i = A.degree(); i < degree; ++i) images[i] = static_cast<Point>(i);
    gens.emplace_back(Permutation(std::move(images)));
  }
  for (const auto& g : B.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < A.degree(); ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < B.degree(); ++i)
      images[A.degree() + i] = static_cast<Point>(A.degree() + g[static_cast<Point>(i)]);
    gens.emplace_back(Permutation(std::move(images)));
  }
  return EnumeratedGroup::enumerate(gens, kDefaultEnumCap, degree);
}

EnumeratedGroup regular_rep(std::size_t order,
                            const std::function<std::size_t(std::size_t, std::size_t)>& mult,
                            const std::vector<std::size_t>& generator_labels) {
  std::vector<Permutation> gens;
  for (std::size_t g : generator_labels) {
    std::vector<Point> images(order);
    for (std::size_t x = 0; x < order; ++x) images[x] = static_cast<Point>(mult(g, x));
    gens.emplace_back(Permutation(std::move(images)));
  }
  auto G = EnumeratedGroup::enumerate(gens, kDefaultEnumCap, order);
  if (G.order() != order) throw std::logic_error("regular_rep: generators do not generate");
  return G;
}

EnumeratedGroup a4() {
  return EnumeratedGroup::enumerate({Permutation::from_cycles(4, {{0, 1, 2}}),
                                     Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
}

EnumeratedGroup q8() {
  // Labels (i, e): a^i b^e with a of order 4, b^2 = a^2, b a b^-1 = a^-1.
  auto mult = [](std::size_t x, std::size_t y) {
    std::size_t i = x % 4, e = x / 4, j = y % 4, f = y / 4;
    std::size_t k = e ? (i + 4 - j) % 4 : (i + j) % 4;
    if (e && f) k = (k + 2) % 4;
    return k + 4 * ((e + f) % 2);
  };
  return regular_rep(8, mult, {1, 4});
}

EnumeratedGroup q16() {
  // Labels (i, e): a^i b^e with a of order 8, b^2 = a^4, b a b^-1 = a^-1.
  auto mult = [](std::size_t x, std::size_t y) {
    std::size_t i = x % 8, e = x / 8, j = y % 8, f = y / 8;
    std::size_t k = e ? (i + 8 - j) % 8 : (i + j) % 8;
    if (e && f) k = (k + 4) % 8;
    return k + 8 * ((e + f) % 2);
  };
  return regular_rep(16, mult, {1, 8});
}

EnumeratedGroup pauli16() {
  // Labels (s, m): i^s sigma_m with sigma in {I, X, Y, Z}; the phase table
  // encodes XY = iZ and cyclic variants.
  auto mult = [](std::size_t x, std::size_t y) {
    std::size_t s = x % 4, m = x / 4, t = y % 4, n = y / 4;
    std::size_t phase = (s + t) % 4;
    std::size_t prod;
    if (m == 0) {
      prod = n;
    } else if (n == 0) {
      prod = m;
    } else if (m == n) {
      prod = 0;
    } else {
      prod = 6 - m - n;
      bool forward = (m == 1 && n == 2) || (m == 2 && n == 3) || (m == 3 && n == 1);
      phase = (phase + (forward ? 1 : 3)) % 4;
    }
    return phase + 4 * prod;
  };
  return regular_rep(16, mult, {1, 4, 8});
}

EnumeratedGroup z4_semi_z4() {
  auto mult = [](std::size_t x, std::size_t y) {
    std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
    std::size_t act = (b % 2) ? (4 - c) % 4 : c;
    return (a + act) % 4 + 4 * ((b + d) % 4);
  };
  return regular_rep(16, mult, {1, 4});
}

EnumeratedGroup z22_semi_z4() {
  auto swap_bits = [](std::size_t v) { return ((v & 1) << 1) | ((v >> 1) & 1); };
  auto mult = [swap_bits](std::size_t x, std::size_t y) {
    std::size_t v = x % 4, i = x / 4, w = y % 4, j = y / 4;
    std::size_t act = (i % 2) ? swap_bits(w) : w;
    return (v ^ act) + 4 * ((i + j) % 4);
  };
  return regular_rep(16, mult, {1, 4});
}

EnumeratedGroup heisenberg27() {
  // Labels (a, b, c) over Z3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
  auto mult = [](std::size_t x, std::size_t y) {
    std::size_t a = x % 3, b = (x / 3) % 3, c = x / 9;
    std::size_t d = y % 3, e = (y / 3) % 3, f = y / 9;
    return (a + d) % 3 + 3 * ((b + e) % 3) + 9 * ((c + f + a * e) % 3);
  };
  return regular_rep(27, mult, {1, 3});
}

EnumeratedGroup z9_semi_z3() { return cyclic_semidirect(9, 4); }

EnumeratedGroup affine_group(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& components, std::uint64_t d,
    std::uint64_t e, std::size_t cap) {
  auto spec = build_affine_spec(components, d, e);
  return EnumeratedGroup::enumerate(to_permutation_group(spec), cap);
}

std::vector<EnumeratedGroup> p_group_corpus() {
  std::vector<EnumeratedGroup> out;
  // Order 8, all five.
  out.push_back(cyclic(8));
  out.push_back(direct_product(cyclic(4), cyclic(2)));
  out.push_back(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))));
  out.push_back(dihedral(4));
  out.push_back(q8());
  // Order 16, all fourteen.
  out.push_back(cyclic(16));
  out.push_back(direct_product(cyclic(4), cyclic(4)));
  out.push_back(direct_product(cyclic(8), cyclic(2)));
  out.push_back(direct_product(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  out.push_back(direct_product(direct_product(cyclic(2), cyclic(2)),
                               direct_product(cyclic(2), cyclic(2))));
  out.push_back(dihedral(8));
  out.push_back(q16());
  out.push_back(cyclic_semidirect(8, 3));  // semidihedral
  out.push_back(cyclic_semidirect(8, 5));  // modular
  out.push_back(direct_product(dihedral(4), cyclic(2)));
  out.push_back(direct_product(q8(), cyclic(2)));
  out.push_back(pauli16());
  out.push_back(z4_semi_z4());
  out.push_back(z22_semi_z4());
  // Order 27, all five.
  out.push_back(cyclic(27));
  out.push_back(direct_product(cyclic(9), cyclic(3)));
  out.push_back(direct_product(cyclic(3), direct_product(cyclic(3), cyclic(3))));
  out.push_back(heisenberg27());
  out.push_back(z9_semi_z3());
  return out;
}

std::vector<SubgroupHandle> all_normal_subgroups(const EnumeratedGroup& G) {
  auto classes = conjugacy_classes(G);

  std::vector<std::vector<std::uint8_t>> flag_sets;
  auto add = [&](const std::vector<std::uint8_t>& flags) {
    if (std::find(flag_sets.begin(), flag_sets.end(), flags) == flag_sets.end())
      flag_sets.push_back(flags);
  };

  add(trivial_subgroup(G).flags());
  for (const auto& cls : classes)
    add(normal_closure(G, {cls.front()}).flags());

  // Close under pairwise join; every normal subgroup is a join of class
  // closures of the classes it contains.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = flag_sets.size();
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) {
        std::vector<std::size_t> gens;
        for (std::size_t i = 0; i < G.order(); ++i)
          if (flag_sets[a][i] || flag_sets[b][i]) gens.push_back(i);
        auto join = subgroup_generated(G, gens).flags();
        if (std::find(flag_sets.begin(), flag_sets.end(), join) == flag_sets.end()) {
          flag_sets.push_back(std::move(join));
          grew = true;
        }
      }
    }
  }

  std::vector<SubgroupHandle> out;
  out.reserve(flag_sets.size());
  for (auto& flags : flag_sets) out.emplace_back(G, std::move(flags));
  return out;
}

std::optional<std::uint64_t> frobenius_kernel_order_oracle(const EnumeratedGroup& G) {
  for (const auto& N : all_normal_subgroups(G)) {
    if (N.order() <= 1 || N.order() >= G.order()) continue;
    bool kernel = true;
    for (std::size_t x = 1; x < G.order() && kernel; ++x) {
      if (!N.contains(x)) continue;
      for (std::size_t g = 0; g < G.order(); ++g) {
        if (N.contains(g)) continue;
        if (commutes(G.element(g), G.element(x))) {
          kernel = false;
          break;
        }
      }
    }
    if (kernel) return N.order();
  }
  return std::nullopt;
}

std::uint64_t delta_component_count_pairwise(const EnumeratedGroup& G) {
  const std::size_t n = G.order();
  std::vector<std::uint8_t> visited(n, 0);
  std::uint64_t components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 1; start < n; ++start) {
    if (visited[start]) continue;
    ++components;
    visited[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 1; u < n; ++u) {
        if (visited[u] || u == v) continue;
        if (cyclic_adjacent(G, v, u)) {
          visited[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

}  // namespace cycgraph::corpus
