#include "cycgraph/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "cycgraph/errors.hpp"

namespace cycgraph {

namespace {

// Hash/equality over a growing element pool, so the BFS set stores indices
// instead of duplicating image vectors.
struct PoolHash {
  const std::vector<Permutation>* pool;
  std::size_t operator()(std::uint32_t i) const {
    const auto& v = (*pool)[i].images();
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct PoolEq {
  const std::vector<Permutation>* pool;
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    return (*pool)[a].images() == (*pool)[b].images();
  }
};

bool images_less(const std::vector<Point>& a, const std::vector<Point>& b) {
  return a < b;
}

}  // namespace

EnumeratedGroup EnumeratedGroup::enumerate(std::vector<Permutation> generators,
                                           std::size_t cap, std::size_t degree_if_empty) {
  std::size_t degree = generators.empty() ? degree_if_empty : generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw DegreeMismatchError("enumerate: generator degree mismatch");

  std::vector<Permutation> pool;
  pool.reserve(256);
  pool.emplace_back(Permutation::identity(degree));

  PoolHash hash{&pool};
  PoolEq eq{&pool};
  std::unordered_set<std::uint32_t, PoolHash, PoolEq> seen(64, hash, eq);
  seen.insert(0);

  std::vector<Point> buffer;
  for (std::size_t head = 0; head < pool.size(); ++head) {
    for (const auto& gen : generators) {
      compose_into(pool[head], gen, buffer);
      pool.emplace_back(Permutation::unchecked(std::vector<Point>(buffer)));
      auto [it, inserted] = seen.insert(static_cast<std::uint32_t>(pool.size() - 1));
      if (!inserted) {
        pool.pop_back();
      } else if (pool.size() > cap) {
        throw CapExceededError("enumerate: group larger than enumeration cap", cap);
      }
    }
  }

  std::sort(pool.begin(), pool.end());

  EnumeratedGroup G;
  G.degree_ = degree;
  G.elements_ = std::move(pool);
  G.generators_ = std::move(generators);

  G.inverse_.resize(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i)
    G.inverse_[i] = static_cast<std::uint32_t>(G.index_of(G.elements_[i].inverse()));

  G.generator_indices_.reserve(G.generators_.size());
  for (const auto& g : G.generators_) G.generator_indices_.push_back(G.index_of(g));

  return G;
}

std::size_t EnumeratedGroup::index_of(const Permutation& p) const {
  auto found = find(p);
  if (!found) throw NotAMemberError("element is not a member of the group");
  return *found;
}

std::optional<std::size_t> EnumeratedGroup::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  return find_images(p.images());
}

std::optional<std::size_t> EnumeratedGroup::find_images(const std::vector<Point>& images) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), images,
                             [](const Permutation& x, const std::vector<Point>& v) {
                               return images_less(x.images(), v);
                             });
  if (it == elements_.end() || it->images() != images) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t EnumeratedGroup::compose_index(std::size_t a, std::size_t b) const {
  thread_local std::vector<Point> buffer;
  compose_images(elements_[a].images(), elements_[b].images(), buffer);
  // Closure guarantees the product is present.
  return *find_images(buffer);
}

SubgroupHandle::SubgroupHandle(const EnumeratedGroup& parent,
                               std::vector<std::uint8_t> member_flags)
    : parent_(&parent), member_(std::move(member_flags)) {
  if (member_.size() != parent.order())
    throw std::invalid_argument("member flag vector does not match group order");
  if (!member_[parent.identity_index()])
    throw std::invalid_argument("subgroup must contain the identity");
  order_ = 0;
  for (auto f : member_) order_ += (f != 0);
}

std::vector<std::size_t> SubgroupHandle::member_indices() const {
  std::vector<std::size_t> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) out.push_back(i);
  return out;
}

bool SubgroupHandle::validate() const {
  auto members = member_indices();
  for (std::size_t a : members) {
    if (!member_[parent_->inverse_index(a)]) return false;
    for (std::size_t b : members)
      if (!member_[parent_->compose_index(a, b)]) return false;
  }
  return true;
}

SubgroupHandle trivial_subgroup(const EnumeratedGroup& G) {
  std::vector<std::uint8_t> flags(G.order(), 0);
  flags[G.identity_index()] = 1;
  return SubgroupHandle(G, std::move(flags));
}

SubgroupHandle whole_group(const EnumeratedGroup& G) {
  return SubgroupHandle(G, std::vector<std::uint8_t>(G.order(), 1));
}

std::uint64_t centralizer_order(const EnumeratedGroup& G, const Permutation& x) {
  if (!G.contains(x)) throw NotAMemberError("centralizer_order: x is not in G");
  std::uint64_t count = 0;
  for (const auto& g : G.elements())
    if (commutes(g, x)) ++count;
  return count;
}

std::vector<std::size_t> center_indices(const EnumeratedGroup& G) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < G.order(); ++i) {
    bool central = true;
    for (const auto& gen : G.generators()) {
      if (!commutes(G.element(i), gen)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const EnumeratedGroup& G) {
  const std::size_t n = G.order();
  std::vector<Permutation> gens = G.generators();
  std::vector<Permutation> gen_invs;
  gen_invs.reserve(gens.size());
  for (const auto& g : gens) gen_invs.push_back(g.inverse());

  std::vector<std::int32_t> class_of(n, -1);
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> stack;
  std::vector<Point> buf1, buf2;

  for (std::size_t start = 0; start < n; ++start) {
    if (class_of[start] >= 0) continue;
    auto id = static_cast<std::int32_t>(classes.size());
    classes.emplace_back();
    class_of[start] = id;
    stack.push_back(static_cast<std::uint32_t>(start));
    while (!stack.empty()) {
      std::uint32_t i = stack.back();
      stack.pop_back();
      classes[id].push_back(i);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        compose_images(gen_invs[k].images(), G.element(i).images(), buf1);
        compose_images(buf1, gens[k].images(), buf2);
        std::size_t j = *G.find_images(buf2);
        if (class_of[j] < 0) {
          class_of[j] = id;
          stack.push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
    std::sort(classes[id].begin(), classes[id].end());
  }
  return classes;
}

namespace {

// Index-space BFS closure; returns false (leaving `flags` partial) once the
// subgroup grows past `cap`.
bool generate_into(const EnumeratedGroup& G, const std::vector<std::size_t>& gens,
                   std::vector<std::uint8_t>& flags, std::size_t cap) {
  flags.assign(G.order(), 0);
  flags[G.identity_index()] = 1;
  std::vector<std::uint32_t> list{static_cast<std::uint32_t>(G.identity_index())};
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (std::size_t t : gens) {
      std::size_t prod = G.compose_index(list[head], t);
      if (!flags[prod]) {
        flags[prod] = 1;
        list.push_back(static_cast<std::uint32_t>(prod));
        if (list.size() > cap) return false;
      }
    }
  }
  return true;
}

struct ClosureResult {
  std::vector<std::uint8_t> flags;
  std::vector<std::size_t> gens;  // small generating set found
  bool within_cap;
};

// Normal closure of the seeds: grow the generating set by conjugates of its
// members under the group generators until the generated subgroup is stable.
ClosureResult normal_closure_capped(const EnumeratedGroup& G,
                                    const std::vector<std::size_t>& seeds, std::size_t cap) {
  ClosureResult r;
  r.gens.clear();
  for (std::size_t s : seeds)
    if (s != G.identity_index()) r.gens.push_back(s);
  std::sort(r.gens.begin(), r.gens.end());
  r.gens.erase(std::unique(r.gens.begin(), r.gens.end()), r.gens.end());

  while (true) {
    if (!generate_into(G, r.gens, r.flags, cap)) {
      r.within_cap = false;
      return r;
    }
    std::vector<std::size_t> fresh;
    for (std::size_t t : r.gens) {
      for (std::size_t gi : G.generator_indices()) {
        std::size_t c = G.compose_index(G.compose_index(G.inverse_index(gi), t), gi);
        if (!r.flags[c]) fresh.push_back(c);
      }
    }
    if (fresh.empty()) break;
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    r.gens.insert(r.gens.end(), fresh.begin(), fresh.end());
  }
  r.within_cap = true;
  return r;
}

std::size_t flag_count(const std::vector<std::uint8_t>& flags) {
  std::size_t n = 0;
  for (auto f : flags) n += (f != 0);
  return n;
}

}  // namespace

SubgroupHandle subgroup_generated(const EnumeratedGroup& G,
                                  const std::vector<std::size_t>& generator_indices) {
  for (std::size_t i : generator_indices)
    if (i >= G.order()) throw NotAMemberError("subgroup_generated: index out of range");
  std::vector<std::uint8_t> flags;
  generate_into(G, generator_indices, flags, G.order());
  return SubgroupHandle(G, std::move(flags));
}

SubgroupHandle normal_closure(const EnumeratedGroup& G,
                              const std::vector<std::size_t>& seed_indices) {
  for (std::size_t i : seed_indices)
    if (i >= G.order()) throw NotAMemberError("normal_closure: index out of range");
  auto r = normal_closure_capped(G, seed_indices, G.order());
  return SubgroupHandle(G, std::move(r.flags));
}

namespace {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

struct CoreResult {
  std::vector<std::uint8_t> flags;
  std::vector<std::size_t> gens;
};

CoreResult p_core_impl(const EnumeratedGroup& G, std::uint64_t p,
                       const std::vector<std::vector<std::uint32_t>>& classes) {
  const std::uint64_t sylow = p_part(G.order(), p);

  CoreResult acc;
  acc.gens.clear();
  generate_into(G, acc.gens, acc.flags, G.order());

  for (const auto& cls : classes) {
    std::size_t rep = cls.front();
    if (rep == G.identity_index()) continue;
    if (!is_p_power(element_order(G.element(rep)), p)) continue;
    if (acc.flags[rep]) continue;  // class already inside (acc is normal)

    // The closure of a p-subgroup cannot pass the Sylow order, so the cap
    // doubles as an early reject of classes whose closure is not a p-group.
    auto closure = normal_closure_capped(G, {rep}, sylow);
    if (!closure.within_cap) continue;
    if (!is_p_power(flag_count(closure.flags), p)) continue;

    std::vector<std::size_t> joint = acc.gens;
    joint.insert(joint.end(), closure.gens.begin(), closure.gens.end());
    std::vector<std::uint8_t> joined;
    if (!generate_into(G, joint, joined, sylow)) continue;
    if (!is_p_power(flag_count(joined), p)) continue;
    acc.gens = std::move(joint);
    acc.flags = std::move(joined);
  }
  return acc;
}

}  // namespace

SubgroupHandle p_core(const EnumeratedGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p_core: p must be prime");
  auto classes = conjugacy_classes(G);
  auto core = p_core_impl(G, p, classes);
  return SubgroupHandle(G, std::move(core.flags));
}

SubgroupHandle fitting_subgroup(const EnumeratedGroup& G) {
  auto classes = conjugacy_classes(G);
  std::vector<std::size_t> gens;
  for (std::uint64_t p : prime_factors(G.order())) {
    auto core = p_core_impl(G, p, classes);
    gens.insert(gens.end(), core.gens.begin(), core.gens.end());
  }
  std::vector<std::uint8_t> flags;
  generate_into(G, gens, flags, G.order());
  return SubgroupHandle(G, std::move(flags));
}

bool is_normal(const EnumeratedGroup& G, const SubgroupHandle& N) {
  for (std::size_t m : N.member_indices())
    for (std::size_t gi : G.generator_indices()) {
      std::size_t c = G.compose_index(G.compose_index(G.inverse_index(gi), m), gi);
      if (!N.contains(c)) return false;
    }
  return true;
}

CosetAction coset_action_full(const EnumeratedGroup& G, const SubgroupHandle& N) {
  if (&N.parent() != &G) throw std::invalid_argument("coset_action: subgroup of a different group");
  if (!is_normal(G, N)) throw NotNormalError("coset_action: subgroup is not normal");

  const std::size_t n = G.order();
  const std::size_t n_cosets = n / N.order();
  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

  auto members = N.member_indices();
  std::vector<std::uint32_t> coset_of(n, kUnassigned);
  std::vector<std::size_t> coset_rep;
  coset_rep.reserve(n_cosets);

  for (std::size_t i = 0; i < n; ++i) {
    if (coset_of[i] != kUnassigned) continue;
    auto c = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(i);
    for (std::size_t m : members) coset_of[G.compose_index(m, i)] = c;
  }

  auto coset_perm = [&](std::size_t element_index) {
    std::vector<Point> images(n_cosets);
    for (std::size_t c = 0; c < n_cosets; ++c)
      images[c] = coset_of[G.compose_index(coset_rep[c], element_index)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> qgens;
  qgens.reserve(G.generators().size());
  for (std::size_t gi : G.generator_indices()) qgens.push_back(coset_perm(gi));

  EnumeratedGroup quotient = EnumeratedGroup::enumerate(std::move(qgens), n_cosets, n_cosets);
  if (quotient.order() != n_cosets)
    throw std::logic_error("coset_action: quotient order mismatch");
  std::vector<std::uint32_t> quotient_index_of_coset(n_cosets);
  for (std::size_t c = 0; c < n_cosets; ++c)
    quotient_index_of_coset[c] =
        static_cast<std::uint32_t>(quotient.index_of(coset_perm(coset_rep[c])));
  return CosetAction{&G, std::move(quotient), std::move(coset_of),
                     std::move(quotient_index_of_coset)};
}

EnumeratedGroup coset_action(const EnumeratedGroup& G, const SubgroupHandle& N) {
  return std::move(coset_action_full(G, N).quotient);
}

SubgroupHandle preimage(const CosetAction& action, const SubgroupHandle& quotient_subgroup) {
  if (&quotient_subgroup.parent() != &action.quotient)
    throw std::invalid_argument("preimage: subgroup of a different quotient");
  std::vector<std::uint8_t> flags(action.parent->order(), 0);
  for (std::size_t i = 0; i < flags.size(); ++i)
    flags[i] = quotient_subgroup.contains(action.quotient_image(i)) ? 1 : 0;
  return SubgroupHandle(*action.parent, std::move(flags));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace cycgraph
