#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycgraph/affine.hpp"
#include "cycgraph/graphs.hpp"
#include "cycgraph/group.hpp"

namespace cycgraph {

/// A verified Frobenius kernel: K normal with 1 < |K| < |G| and
/// C_G(x) <= K for every nonidentity x in K.
struct FrobeniusDecomposition {
  SubgroupHandle kernel;
  std::uint64_t complement_order;
};

/// A verified chain 1 < K < L < G: L is Frobenius with kernel K, and G/K is
/// Frobenius with kernel L/K.  Case A: |K| has at least two prime divisors;
/// case B: K and G/L are p-groups for one prime p; case C: K is a p-group
/// and |G:L| is not a power of p.
struct TwoFrobeniusDecomposition {
  SubgroupHandle K;
  SubgroupHandle L;
  std::uint64_t H_order;     // |L : K|
  std::uint64_t index_G_L;   // |G : L|
  std::uint64_t D_order;     // |K| * |G : L|
  std::uint64_t N_order;     // |G| / |K|
  TwoFrobeniusCase case_label;
  std::optional<std::uint64_t> p;  // for cases B and C
};

/// True iff N is normal, proper and nontrivial, and the centralizer of every
/// nonidentity element of N lies inside N.
bool is_frobenius_with_kernel(const EnumeratedGroup& G, const SubgroupHandle& N);

/// Detection via the Fitting subgroup: K := F(G), L := preimage of
/// F(G/K), then both Frobenius conditions are re-verified by the
/// centralizer characterization.  Never returns an unverified decomposition.
std::optional<TwoFrobeniusDecomposition> detect_two_frobenius(const EnumeratedGroup& G);

/// Verification-only path for a caller-supplied chain (K, L); used when the
/// Fitting-based detection is distrusted or bypassed.
std::optional<TwoFrobeniusDecomposition> verify_two_frobenius(const EnumeratedGroup& G,
                                                              const SubgroupHandle& K,
                                                              const SubgroupHandle& L);

std::optional<FrobeniusDecomposition> detect_frobenius(const EnumeratedGroup& G);

/// The cyclic complement <h> for the least-index h in L of order |L:K|.
/// On verified input it always exists; absence is an internal consistency
/// failure and throws std::logic_error.
SubgroupHandle find_cyclic_complement(const EnumeratedGroup& G, const SubgroupHandle& L,
                                      const SubgroupHandle& K);

struct StructureCheck {
  std::string name;
  bool pass;
};

struct StructureReport {
  std::uint64_t H_order = 0;
  std::vector<StructureCheck> checks;
  bool all_pass() const;
};

/// Runtime verification of the structural facts a verified chain must
/// satisfy: H cyclic of odd order, the Hall gcd condition, H \ {1} forming
/// exactly one component of the cyclic graph, the trivial center, and every
/// prime-order element outside the conjugates of H centralizing a
/// nontrivial element of K.
StructureReport verify_structure(const EnumeratedGroup& G, const TwoFrobeniusDecomposition& dec);

/// As above but reusing precomputed conjugacy classes and/or cyclic-graph
/// components, so orchestration code does not recompute them.
StructureReport verify_structure(const EnumeratedGroup& G, const TwoFrobeniusDecomposition& dec,
                                 const std::vector<std::vector<std::uint32_t>>* classes,
                                 DeltaComponents* delta);

}  // namespace cycgraph
