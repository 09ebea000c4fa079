#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cycgraph/affine.hpp"
#include "cycgraph/group.hpp"
#include "cycgraph/structure.hpp"

namespace cycgraph {

/// m_p(G): the number of subgroups of order p, computed as
/// (#elements of order p) / (p - 1); the division must be exact.
std::uint64_t count_subgroups_of_order_p(const EnumeratedGroup& G, std::uint64_t p);

/// m_p restricted to a subgroup.
std::uint64_t count_subgroups_of_order_p(const SubgroupHandle& S, std::uint64_t p);

/// m_p^*(G): the number of order-p subgroups not centralized by any element
/// of prime order other than p.  Computed by the centralizer test: a
/// canonical representative x of each order-p subgroup counts when
/// |C_G(x)| is a power of p.
std::uint64_t count_p_isolated_subgroups(const EnumeratedGroup& G, std::uint64_t p);

/// Independent route to m_p^*: literal search of the centralizer of each
/// representative for elements of prime order other than p.  Slower;
/// kept as a cross-check oracle against the centralizer-order test.
std::uint64_t count_p_isolated_subgroups_literal(const EnumeratedGroup& G, std::uint64_t p);

enum class FormulaName {
  ThmA,               // |K| + 1
  ThmB,               // |K| + m_p(G)
  ThmC,               // |K| + |L:K| + m_p^*
  FrobKernelPPower,   // |K| + m_p(K)
  FrobKernelMixed,    // |K| + 1
  GammaTwoFrobenius,  // |K| + 1
};

const char* to_string(FormulaName f);

/// The quantities a closed-form count consumed; zero when not applicable.
struct CountInputs {
  std::uint64_t K_order = 0;
  std::uint64_t H_order = 0;
  std::uint64_t m_p = 0;
  std::uint64_t m_p_star = 0;
  std::uint64_t p = 0;
};

struct CountResult {
  std::uint64_t value = 0;
  FormulaName formula = FormulaName::ThmA;
  CountInputs inputs;

  /// Recompute the value from the recorded inputs.
  std::uint64_t recompute() const;
};

/// Closed-form cyclic-graph component count for a verified chain; m_p and
/// m_p^* are taken from the enumerated group.
CountResult delta_count_two_frobenius(const EnumeratedGroup& G,
                                      const TwoFrobeniusDecomposition& dec);

/// Closed-form count from structured affine data alone.  Throws
/// UncomputableError when the structured path cannot supply the needed
/// count (case B, or case C with p dividing |G:L|) — the caller must
/// enumerate instead.
CountResult delta_count_structured(const StructuredCounts& counts);

/// Closed-form cyclic-graph component count for a Frobenius group: kernel of
/// prime-power order contributes |K| + m_p(K), otherwise |K| + 1.
CountResult delta_count_frobenius(const EnumeratedGroup& G, const FrobeniusDecomposition& dec);

/// Commuting-graph component count of a verified chain: |K| + 1.
CountResult gamma_count_two_frobenius(std::uint64_t K_order);

}  // namespace cycgraph
