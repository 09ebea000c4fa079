#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cycgraph {

/// Image of a point under a permutation.
using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image sequence.
///
/// Composition convention used throughout the library: compose(p, q) applies
/// p first, then q.  All operations and tests rely on this convention.
class Permutation {
public:
  /// Identity on `degree` points.  degree must be >= 1.
  explicit Permutation(std::size_t degree);

  /// From an explicit image sequence; validates that it is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// From disjoint-cycle data; points absent from every cycle are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Skips bijection validation; for closure internals where the input is a
  /// product of permutations and therefore a permutation by construction.
  static Permutation unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, e.g. "(0 1)(2 3)"; identity prints as "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  /// Lexicographic on image sequences; the canonical element order.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

/// Composition into a reusable buffer, for hot loops.
void compose_into(const Permutation& p, const Permutation& q, std::vector<Point>& out);

/// Raw image-sequence composition (p first, then q); degrees must agree.
void compose_images(const std::vector<Point>& p, const std::vector<Point>& q,
                    std::vector<Point>& out);

/// h^{-1} g h under the left-first convention.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// True iff xy = yx.  Bails out at the first disagreeing point, so
/// non-commuting pairs are cheap to reject.
bool commutes(const Permutation& x, const Permutation& y);

/// Least t >= 1 with g^t = identity; the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& g);

/// [g, g^2, ..., g^o(g)] with the identity last; length o(g).
std::vector<Permutation> cyclic_subgroup(const Permutation& g);

}  // namespace cycgraph
