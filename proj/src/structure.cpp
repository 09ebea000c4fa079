#include "cycgraph/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cycgraph/errors.hpp"

namespace cycgraph {

namespace {

// Centralizer condition of the Frobenius-kernel characterization, restricted
// to a subgroup: for every x in K \ {1}, no element of L outside K commutes
// with x.  Pass L_flags = nullptr to take L = G.
bool kernel_condition(const EnumeratedGroup& G, const std::vector<std::uint8_t>* L_flags,
                      const SubgroupHandle& K) {
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (!K.contains(x) || x == G.identity_index()) continue;
    const Permutation& px = G.element(x);
    for (std::size_t g = 0; g < G.order(); ++g) {
      if (K.contains(g)) continue;
      if (L_flags && !(*L_flags)[g]) continue;
      if (commutes(G.element(g), px)) return false;
    }
  }
  return true;
}

TwoFrobeniusCase classify(std::uint64_t K_order, std::uint64_t index_G_L,
                          std::optional<std::uint64_t>& p_out) {
  auto k_primes = prime_factors(K_order);
  if (k_primes.size() >= 2) return TwoFrobeniusCase::A;
  std::uint64_t p = k_primes.front();
  p_out = p;
  return is_p_power(index_G_L, p) ? TwoFrobeniusCase::B : TwoFrobeniusCase::C;
}

}  // namespace

bool is_frobenius_with_kernel(const EnumeratedGroup& G, const SubgroupHandle& N) {
  if (&N.parent() != &G) return false;
  if (N.order() <= 1 || N.order() >= G.order()) return false;
  if (!is_normal(G, N)) return false;
  return kernel_condition(G, nullptr, N);
}

namespace {

std::optional<TwoFrobeniusDecomposition> verify_with_action(const EnumeratedGroup& G,
                                                            const SubgroupHandle& K,
                                                            const SubgroupHandle& L,
                                                            const CosetAction& action) {
  if (K.order() <= 1 || K.order() >= L.order() || L.order() >= G.order()) return std::nullopt;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (K.contains(i) && !L.contains(i)) return std::nullopt;
  if (!is_normal(G, L)) return std::nullopt;

  // L must be Frobenius with kernel K.
  if (!kernel_condition(G, &L.flags(), K)) return std::nullopt;

  // G/K must be Frobenius with kernel L/K.
  std::vector<std::uint8_t> quotient_flags(action.quotient.order(), 0);
  for (std::size_t i = 0; i < G.order(); ++i)
    if (L.contains(i)) quotient_flags[action.quotient_image(i)] = 1;
  SubgroupHandle quotient_L(action.quotient, std::move(quotient_flags));
  if (!is_frobenius_with_kernel(action.quotient, quotient_L)) return std::nullopt;

  TwoFrobeniusDecomposition dec{K, L, 0, 0, 0, 0, TwoFrobeniusCase::A, std::nullopt};
  dec.H_order = L.order() / K.order();
  dec.index_G_L = G.order() / L.order();
  dec.D_order = K.order() * dec.index_G_L;
  dec.N_order = G.order() / K.order();
  dec.case_label = classify(K.order(), dec.index_G_L, dec.p);
  return dec;
}

}  // namespace

std::optional<TwoFrobeniusDecomposition> detect_two_frobenius(const EnumeratedGroup& G) {
  SubgroupHandle K = fitting_subgroup(G);
  if (K.is_trivial() || K.is_whole_group()) return std::nullopt;

  CosetAction action = coset_action_full(G, K);
  SubgroupHandle quotient_fitting = fitting_subgroup(action.quotient);
  if (quotient_fitting.is_trivial() || quotient_fitting.is_whole_group()) return std::nullopt;

  SubgroupHandle L = preimage(action, quotient_fitting);
  return verify_with_action(G, K, L, action);
}

std::optional<TwoFrobeniusDecomposition> verify_two_frobenius(const EnumeratedGroup& G,
                                                              const SubgroupHandle& K,
                                                              const SubgroupHandle& L) {
  if (&K.parent() != &G || &L.parent() != &G) return std::nullopt;
  if (K.order() <= 1 || K.order() >= G.order()) return std::nullopt;
  if (!is_normal(G, K)) return std::nullopt;
  CosetAction action = coset_action_full(G, K);
  return verify_with_action(G, K, L, action);
}

std::optional<FrobeniusDecomposition> detect_frobenius(const EnumeratedGroup& G) {
  SubgroupHandle K = fitting_subgroup(G);
  if (K.is_trivial() || K.is_whole_group()) return std::nullopt;
  if (!is_frobenius_with_kernel(G, K)) return std::nullopt;
  return FrobeniusDecomposition{K, G.order() / K.order()};
}

SubgroupHandle find_cyclic_complement(const EnumeratedGroup& G, const SubgroupHandle& L,
                                      const SubgroupHandle& K) {
  const std::uint64_t target = L.order() / K.order();
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (!L.contains(i) || K.contains(i)) continue;
    if (element_order(G.element(i)) != target) continue;

    std::vector<std::uint8_t> flags(G.order(), 0);
    flags[G.identity_index()] = 1;
    bool meets_kernel = false;
    std::size_t j = i;
    while (j != G.identity_index()) {
      if (K.contains(j)) {
        meets_kernel = true;
        break;
      }
      flags[j] = 1;
      j = G.compose_index(j, i);
    }
    if (!meets_kernel) return SubgroupHandle(G, std::move(flags));
  }
  throw std::logic_error(
      "find_cyclic_complement: no cyclic complement found; the decomposition was not verified");
}

bool StructureReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const StructureCheck& c) { return c.pass; });
}

StructureReport verify_structure(const EnumeratedGroup& G, const TwoFrobeniusDecomposition& dec) {
  return verify_structure(G, dec, nullptr, nullptr);
}

StructureReport verify_structure(const EnumeratedGroup& G, const TwoFrobeniusDecomposition& dec,
                                 const std::vector<std::vector<std::uint32_t>>* classes,
                                 DeltaComponents* delta) {
  StructureReport report;

  SubgroupHandle H = find_cyclic_complement(G, dec.L, dec.K);
  report.H_order = H.order();

  // (a) H cyclic of odd order.  Cyclic by construction; record the oddness
  // and that the order is the full index |L:K|.
  report.checks.push_back({"H cyclic of odd order",
                           H.order() == dec.H_order && H.order() % 2 == 1});

  // (b) gcd(|K| * |G:L|, |H|) = 1 (D is a Hall subgroup).
  report.checks.push_back(
      {"gcd(|D|, |H|) = 1", std::gcd(dec.D_order, dec.H_order) == std::uint64_t{1}});

  // (c) H \ {1} is exactly one component of the cyclic graph.
  std::optional<DeltaComponents> local_delta;
  if (!delta) {
    local_delta = delta_components_with_forest(G);
    delta = &*local_delta;
  }
  {
    auto members = H.member_indices();
    std::uint32_t root = 0;
    bool one_component = true;
    bool first = true;
    for (std::size_t m : members) {
      if (m == G.identity_index()) continue;
      std::uint32_t r = delta->forest.find(static_cast<std::uint32_t>(m));
      if (first) {
        root = r;
        first = false;
      } else if (r != root) {
        one_component = false;
      }
    }
    // The component must also not reach outside H.
    std::uint64_t component_size = 0;
    for (std::size_t v = 1; v < G.order(); ++v)
      if (delta->forest.find(static_cast<std::uint32_t>(v)) == root) ++component_size;
    report.checks.push_back({"H \\ {1} is one cyclic-graph component",
                             one_component && component_size == H.order() - 1});
  }

  // (d) Every prime-order element outside the conjugates of H centralizes a
  // nontrivial element of K.
  {
    std::vector<std::vector<std::uint32_t>> local_classes;
    if (!classes) {
      local_classes = conjugacy_classes(G);
      classes = &local_classes;
    }
    // Union of the conjugates of H = union of the classes meeting H.
    std::vector<std::uint8_t> in_h_conjugate(G.order(), 0);
    for (const auto& cls : *classes) {
      bool meets = false;
      for (std::uint32_t m : cls)
        if (H.contains(m)) {
          meets = true;
          break;
        }
      if (meets)
        for (std::uint32_t m : cls) in_h_conjugate[m] = 1;
    }

    bool pass = true;
    auto kernel_members = dec.K.member_indices();
    for (std::size_t x = 1; x < G.order() && pass; ++x) {
      if (in_h_conjugate[x]) continue;
      if (!is_prime(element_order(G.element(x)))) continue;
      bool centralizes_kernel_element = false;
      for (std::size_t k : kernel_members) {
        if (k == G.identity_index()) continue;
        if (commutes(G.element(x), G.element(k))) {
          centralizes_kernel_element = true;
          break;
        }
      }
      if (!centralizes_kernel_element) pass = false;
    }
    report.checks.push_back({"prime-order elements outside conjugates of H centralize K", pass});
  }

  // (e) Z(G) = 1.
  report.checks.push_back({"trivial center", center_indices(G).size() == 1});

  return report;
}

}  // namespace cycgraph
