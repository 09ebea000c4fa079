#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycgraph/perm.hpp"

namespace cycgraph {

inline constexpr std::size_t kDefaultEnumCap = 200'000;

/// A fully enumerated permutation group.
///
/// Elements are kept in canonical order (lexicographic on image sequences),
/// which puts the identity at index 0 and makes indices, reports and DOT
/// output deterministic.  Immutable after construction; concurrent reads are
/// safe.
class EnumeratedGroup {
public:
  /// Breadth-first closure of the generators under composition.  Throws
  /// CapExceededError once the element count passes `cap`, and
  /// DegreeMismatchError if the generators disagree on degree.  An empty
  /// generator list yields the trivial group on `degree_if_empty` points.
  static EnumeratedGroup enumerate(std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultEnumCap,
                                   std::size_t degree_if_empty = 1);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  /// Canonical index of p; throws NotAMemberError if p is not in the group.
  std::size_t index_of(const Permutation& p) const;
  std::optional<std::size_t> find(const Permutation& p) const;
  std::optional<std::size_t> find_images(const std::vector<Point>& images) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  std::size_t identity_index() const { return 0; }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

  /// Index of element(a) composed with element(b) (a applied first).
  std::size_t compose_index(std::size_t a, std::size_t b) const;

  /// Indices of the stored generators.
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

private:
  EnumeratedGroup() = default;

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::size_t> generator_indices_;
};

/// A subgroup of an enumerated parent, stored as member flags over the
/// parent's element indices.  The flagged set must be closed under
/// composition and inverse and contain the identity; `validate()` checks
/// this exhaustively (tests and override paths use it, internal
/// constructions guarantee it).
class SubgroupHandle {
public:
  SubgroupHandle(const EnumeratedGroup& parent, std::vector<std::uint8_t> member_flags);

  const EnumeratedGroup& parent() const { return *parent_; }
  bool contains(std::size_t index) const { return member_[index] != 0; }
  std::size_t order() const { return order_; }
  const std::vector<std::uint8_t>& flags() const { return member_; }

  /// Ascending member indices.
  std::vector<std::size_t> member_indices() const;

  bool is_trivial() const { return order_ == 1; }
  bool is_whole_group() const { return order_ == parent_->order(); }

  /// Exhaustive closure check; O(|S|^2) products.
  bool validate() const;

private:
  const EnumeratedGroup* parent_;
  std::vector<std::uint8_t> member_;
  std::size_t order_;
};

SubgroupHandle trivial_subgroup(const EnumeratedGroup& G);
SubgroupHandle whole_group(const EnumeratedGroup& G);

/// |{g in G : gx = xg}|.  Throws NotAMemberError if x is not in G.
std::uint64_t centralizer_order(const EnumeratedGroup& G, const Permutation& x);

/// Indices of elements commuting with everything (computed against the
/// generators).  Always contains index 0.
std::vector<std::size_t> center_indices(const EnumeratedGroup& G);

/// Partition of the element indices into conjugation orbits.  Classes are
/// ordered by their least element and sorted internally.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const EnumeratedGroup& G);

/// Subgroup generated by the given element indices.
SubgroupHandle subgroup_generated(const EnumeratedGroup& G,
                                  const std::vector<std::size_t>& generator_indices);

/// Least normal subgroup containing the seed elements.
SubgroupHandle normal_closure(const EnumeratedGroup& G,
                              const std::vector<std::size_t>& seed_indices);

/// Largest normal p-subgroup O_p(G): the product of the normal closures of
/// the conjugacy classes of p-elements whose closure is a p-group.
SubgroupHandle p_core(const EnumeratedGroup& G, std::uint64_t p);

/// Fitting subgroup F(G): product of the p-cores over the primes dividing |G|.
SubgroupHandle fitting_subgroup(const EnumeratedGroup& G);

bool is_normal(const EnumeratedGroup& G, const SubgroupHandle& N);

/// The action of G on the right cosets of a normal subgroup, together with
/// the data needed to pull quotient subgroups back to G.
struct CosetAction {
  const EnumeratedGroup* parent;
  EnumeratedGroup quotient;
  /// coset id of each parent element (cosets numbered by least member).
  std::vector<std::uint32_t> coset_of_element;
  /// canonical quotient index of each coset.
  std::vector<std::uint32_t> quotient_index_of_coset;

  std::size_t quotient_image(std::size_t element_index) const {
    return quotient_index_of_coset[coset_of_element[element_index]];
  }
};

/// Permutation image of G on the right cosets of N; |quotient| = |G|/|N|.
/// Throws NotNormalError if N is not normal.
CosetAction coset_action_full(const EnumeratedGroup& G, const SubgroupHandle& N);

/// Convenience wrapper returning just the quotient group.
EnumeratedGroup coset_action(const EnumeratedGroup& G, const SubgroupHandle& N);

/// Subgroup of the parent mapping into `quotient_subgroup` under the action's
/// quotient map.
SubgroupHandle preimage(const CosetAction& action, const SubgroupHandle& quotient_subgroup);

/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// True iff n is a power of the prime p (1 counts as p^0).
bool is_p_power(std::uint64_t n, std::uint64_t p);

}  // namespace cycgraph
