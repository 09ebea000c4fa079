#include "cycgraph/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cycgraph/errors.hpp"

namespace cycgraph {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image sequence is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) { return Permutation(degree); }

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("cycle entry exceeds degree");
      if (moved[from]) throw std::invalid_argument("cycles are not disjoint");
      moved[from] = true;
      result.images_[from] = to;
    }
  }
  return Permutation(std::move(result.images_));
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p(1);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    Point i = start;
    do {
      seen[i] = true;
      cycle.push_back(i);
      i = images_[i];
    } while (i != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  std::vector<Point> out;
  compose_into(p, q, out);
  return Permutation(std::move(out));
}

void compose_into(const Permutation& p, const Permutation& q, std::vector<Point>& out) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("compose: degree mismatch");
  compose_images(p.images(), q.images(), out);
}

void compose_images(const std::vector<Point>& p, const std::vector<Point>& q,
                    std::vector<Point>& out) {
  out.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return compose(compose(h.inverse(), g), h);
}

bool commutes(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree())
    throw DegreeMismatchError("commutes: degree mismatch");
  const auto& xi = x.images();
  const auto& yi = y.images();
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (yi[xi[i]] != xi[yi[i]]) return false;
  return true;
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  std::vector<bool> seen(g.degree(), false);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Point i = start;
    do {
      seen[i] = true;
      ++len;
      i = g[i];
    } while (i != start);
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<Permutation> cyclic_subgroup(const Permutation& g) {
  std::vector<Permutation> powers;
  powers.push_back(g);
  while (!powers.back().is_identity()) powers.push_back(compose(powers.back(), g));
  return powers;
}

}  // namespace cycgraph
