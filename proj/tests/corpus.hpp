#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cycgraph/affine.hpp"
#include "cycgraph/group.hpp"

// Shared fixture constructions and independent brute-force oracles for the
// test suites.  Everything here is deliberately naive: oracles must not share
// code paths with the implementations they check.
namespace cycgraph::corpus {

EnumeratedGroup sym(std::size_t n);
EnumeratedGroup cyclic(std::size_t n);

/// Z_n x| <a>, acting on Z_n by x -> a*x; requires gcd(a, n) = 1.
/// Order n * ord_n(a), degree n.
EnumeratedGroup cyclic_semidirect(std::size_t n, std::size_t multiplier);

/// Dihedral group of order 2n on n points.
EnumeratedGroup dihedral(std::size_t n);

/// A x B acting on the disjoint union of the two point sets.
EnumeratedGroup direct_product(const EnumeratedGroup& A, const EnumeratedGroup& B);

/// Left-regular representation of the group given by a multiplication
/// function on labels 0..order-1 with 0 as identity.
EnumeratedGroup regular_rep(std::size_t order,
                            const std::function<std::size_t(std::size_t, std::size_t)>& mult,
                            const std::vector<std::size_t>& generator_labels);

EnumeratedGroup a4();
EnumeratedGroup q8();
EnumeratedGroup q16();
EnumeratedGroup pauli16();        // central product D4 o Z4
EnumeratedGroup z4_semi_z4();     // Z4 x| Z4, inversion action
EnumeratedGroup z22_semi_z4();    // (Z2 x Z2) x| Z4, coordinate swap
EnumeratedGroup heisenberg27();   // order 27, exponent 3
EnumeratedGroup z9_semi_z3();     // order 27, exponent 9

/// Enumerated realization of an affine family.
EnumeratedGroup affine_group(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& components, std::uint64_t d,
    std::uint64_t e, std::size_t cap = kDefaultEnumCap);

/// All groups of order 8, 16 and 27 (5 + 14 + 5).
std::vector<EnumeratedGroup> p_group_corpus();

/// All normal subgroups, by closing the normal closures of the conjugacy
/// classes under pairwise join.  Exhaustive and independent of p_core /
/// fitting_subgroup.
std::vector<SubgroupHandle> all_normal_subgroups(const EnumeratedGroup& G);

/// Kernel order of G as a Frobenius group, found by trying every normal
/// subgroup against the centralizer condition; nullopt when none works.
std::optional<std::uint64_t> frobenius_kernel_order_oracle(const EnumeratedGroup& G);

/// Cyclic-graph component count from explicit pairwise adjacency and BFS;
/// independent of the union-find path.
std::uint64_t delta_component_count_pairwise(const EnumeratedGroup& G);

}  // namespace cycgraph::corpus
