#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cycgraph/gf.hpp"
#include "cycgraph/perm.hpp"

namespace cycgraph {

inline constexpr std::uint64_t kDefaultDegreeCap = 1u << 20;

enum class TwoFrobeniusCase { A, B, C };

const char* to_string(TwoFrobeniusCase c);

/// One additive factor GF(p^n) together with the multiplicative twist zeta
/// (order exactly d) and the Galois step sigma: x -> x^(p^sigma_exponent)
/// (order exactly e, so sigma_exponent = n/e).
struct AffineComponent {
  FieldSpec field;
  std::uint64_t zeta = 0;
  std::uint32_t sigma_exponent = 0;
};

/// A validated family GF(p_1^n_1) x ... x GF(p_k^n_k) ) (C_d ) C_e): the
/// additive groups form K, the diagonal zeta-multiplication generates L/K,
/// the diagonal Galois action generates G/L.  Supports counting without
/// enumerating the group.
struct AffineGroupSpec {
  std::vector<AffineComponent> components;
  std::uint64_t d = 0;
  std::uint64_t e = 0;

  std::uint64_t k_order() const;
  std::uint64_t group_order() const { return k_order() * d * e; }

  /// Common characteristic, when all components share one.
  std::optional<std::uint64_t> characteristic() const;
};

/// Derived quantities of an affine family, available without enumeration.
struct StructuredCounts {
  std::uint64_t K_order = 0;
  std::uint64_t H_order = 0;     // = d
  std::uint64_t index_G_L = 0;   // = e
  std::uint64_t group_order = 0;
  TwoFrobeniusCase case_label = TwoFrobeniusCase::A;
  std::optional<std::uint64_t> p;  // characteristic, for cases B and C
  std::optional<std::uint64_t> m_p_star;
  std::optional<std::uint64_t> delta_component_count;
};

/// Validates the family conditions and picks deterministic twists.  Throws
/// InvalidFamilyError naming the violated condition.
AffineGroupSpec build_affine_spec(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fields,
                                  std::uint64_t d, std::uint64_t e);

/// Faithful permutation generators on the K_order points of the additive
/// product: translations by a basis of each component, the diagonal
/// multiplication by zeta, and the diagonal Galois map.
std::vector<Permutation> to_permutation_group(const AffineGroupSpec& spec,
                                              std::uint64_t degree_cap = kDefaultDegreeCap);

/// Number of order-p subgroups of the realized group whose centralizer is a
/// p-group, counted without enumeration:
///   |{v in K \ {0} : Stab(v) in C_d x| C_e is trivial}| / (p - 1).
/// Requires a single characteristic p with p coprime to d*e, so that every
/// order-p subgroup lies in K and C_G(v) = K x| Stab(v); throws
/// StructuredCountError otherwise (callers fall back to brute force).
std::uint64_t structured_m_p_star(const AffineGroupSpec& spec);

/// For characteristic 2 (the preconditions of structured_m_p_star with
/// p = 2): the number of involutions of K whose stabilizer in C_d x| C_e has
/// order exactly t, for each t > 1 that occurs.
std::map<std::uint64_t, std::uint64_t> structured_fixed_involution_breakdown(
    const AffineGroupSpec& spec);

/// Order of the stabilizer of a nonzero vector of K in C_d x| C_e; exposed
/// for the subgroup-closure property tests.  `values` holds one element
/// encoding per component.
std::uint64_t stabilizer_order(const AffineGroupSpec& spec,
                               const std::vector<std::uint64_t>& values);

/// All (a, j) pairs fixing the vector; (0, 0) is always present.
std::vector<std::pair<std::uint64_t, std::uint64_t>> stabilizer_pairs(
    const AffineGroupSpec& spec, const std::vector<std::uint64_t>& values);

StructuredCounts structured_counts(const AffineGroupSpec& spec);

}  // namespace cycgraph
