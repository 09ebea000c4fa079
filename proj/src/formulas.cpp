#include "cycgraph/formulas.hpp"

#include <stdexcept>

#include "cycgraph/errors.hpp"

namespace cycgraph {

namespace {

std::uint64_t exact_divide(std::uint64_t count, std::uint64_t p, const char* who) {
  if (count % (p - 1) != 0)
    throw std::logic_error(std::string(who) + ": element count not divisible by p - 1");
  return count / (p - 1);
}

// Least-index generators of the distinct subgroups of order p, ascending.
std::vector<std::size_t> order_p_subgroup_representatives(const EnumeratedGroup& G,
                                                          std::uint64_t p) {
  std::vector<std::size_t> reps;
  std::vector<std::uint8_t> seen(G.order(), 0);
  for (std::size_t i = 1; i < G.order(); ++i) {
    if (seen[i]) continue;
    if (element_order(G.element(i)) != p) continue;
    reps.push_back(i);
    std::size_t j = i;
    while (j != G.identity_index()) {
      seen[j] = 1;
      j = G.compose_index(j, i);
    }
  }
  return reps;
}

}  // namespace

std::uint64_t count_subgroups_of_order_p(const EnumeratedGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("count_subgroups_of_order_p: p must be prime");
  std::uint64_t elements = 0;
  for (const auto& g : G.elements())
    if (element_order(g) == p) ++elements;
  return exact_divide(elements, p, "count_subgroups_of_order_p");
}

std::uint64_t count_subgroups_of_order_p(const SubgroupHandle& S, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("count_subgroups_of_order_p: p must be prime");
  const EnumeratedGroup& G = S.parent();
  std::uint64_t elements = 0;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (S.contains(i) && element_order(G.element(i)) == p) ++elements;
  return exact_divide(elements, p, "count_subgroups_of_order_p");
}

std::uint64_t count_p_isolated_subgroups(const EnumeratedGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("count_p_isolated_subgroups: p must be prime");
  std::uint64_t count = 0;
  for (std::size_t rep : order_p_subgroup_representatives(G, p))
    if (is_p_power(centralizer_order(G, G.element(rep)), p)) ++count;
  return count;
}

std::uint64_t count_p_isolated_subgroups_literal(const EnumeratedGroup& G, std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("count_p_isolated_subgroups_literal: p must be prime");

  std::vector<std::size_t> other_prime_order;
  for (std::size_t i = 1; i < G.order(); ++i) {
    std::uint64_t o = element_order(G.element(i));
    if (o != p && is_prime(o)) other_prime_order.push_back(i);
  }

  std::uint64_t count = 0;
  for (std::size_t rep : order_p_subgroup_representatives(G, p)) {
    const Permutation& x = G.element(rep);
    bool centralized = false;
    for (std::size_t y : other_prime_order) {
      if (commutes(G.element(y), x)) {
        centralized = true;
        break;
      }
    }
    if (!centralized) ++count;
  }
  return count;
}

const char* to_string(FormulaName f) {
  switch (f) {
    case FormulaName::ThmA: return "ThmA";
    case FormulaName::ThmB: return "ThmB";
    case FormulaName::ThmC: return "ThmC";
    case FormulaName::FrobKernelPPower: return "FrobKernelPPower";
    case FormulaName::FrobKernelMixed: return "FrobKernelMixed";
    case FormulaName::GammaTwoFrobenius: return "GammaTwoFrobenius";
  }
  return "?";
}

std::uint64_t CountResult::recompute() const {
  switch (formula) {
    case FormulaName::ThmA: return inputs.K_order + 1;
    case FormulaName::ThmB: return inputs.K_order + inputs.m_p;
    case FormulaName::ThmC: return inputs.K_order + inputs.H_order + inputs.m_p_star;
    case FormulaName::FrobKernelPPower: return inputs.K_order + inputs.m_p;
    case FormulaName::FrobKernelMixed: return inputs.K_order + 1;
    case FormulaName::GammaTwoFrobenius: return inputs.K_order + 1;
  }
  return 0;
}

CountResult delta_count_two_frobenius(const EnumeratedGroup& G,
                                      const TwoFrobeniusDecomposition& dec) {
  CountResult result;
  result.inputs.K_order = dec.K.order();
  switch (dec.case_label) {
    case TwoFrobeniusCase::A:
      result.formula = FormulaName::ThmA;
      break;
    case TwoFrobeniusCase::B:
      result.formula = FormulaName::ThmB;
      result.inputs.p = *dec.p;
      result.inputs.m_p = count_subgroups_of_order_p(G, *dec.p);
      break;
    case TwoFrobeniusCase::C:
      result.formula = FormulaName::ThmC;
      result.inputs.p = *dec.p;
      result.inputs.H_order = dec.H_order;
      result.inputs.m_p_star = count_p_isolated_subgroups(G, *dec.p);
      break;
  }
  result.value = result.recompute();
  return result;
}

CountResult delta_count_structured(const StructuredCounts& counts) {
  CountResult result;
  result.inputs.K_order = counts.K_order;
  switch (counts.case_label) {
    case TwoFrobeniusCase::A:
      result.formula = FormulaName::ThmA;
      break;
    case TwoFrobeniusCase::B:
      throw UncomputableError(
          "delta_count_structured: case B needs m_p of the whole group; enumerate instead");
    case TwoFrobeniusCase::C:
      if (!counts.m_p_star)
        throw UncomputableError(
            "delta_count_structured: p divides |G:L|, the structured stabilizer count does not "
            "apply; enumerate instead");
      result.formula = FormulaName::ThmC;
      result.inputs.p = *counts.p;
      result.inputs.H_order = counts.H_order;
      result.inputs.m_p_star = *counts.m_p_star;
      break;
  }
  result.value = result.recompute();
  return result;
}

CountResult delta_count_frobenius(const EnumeratedGroup& G, const FrobeniusDecomposition& dec) {
  CountResult result;
  result.inputs.K_order = dec.kernel.order();
  auto primes = prime_factors(dec.kernel.order());
  if (primes.size() == 1) {
    result.formula = FormulaName::FrobKernelPPower;
    result.inputs.p = primes.front();
    result.inputs.m_p = count_subgroups_of_order_p(dec.kernel, primes.front());
  } else {
    result.formula = FormulaName::FrobKernelMixed;
  }
  result.value = result.recompute();
  return result;
}

CountResult gamma_count_two_frobenius(std::uint64_t K_order) {
  CountResult result;
  result.formula = FormulaName::GammaTwoFrobenius;
  result.inputs.K_order = K_order;
  result.value = result.recompute();
  return result;
}

}  // namespace cycgraph
