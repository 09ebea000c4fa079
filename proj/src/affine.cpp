#include "cycgraph/affine.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cycgraph/errors.hpp"
#include "cycgraph/group.hpp"

namespace cycgraph {

const char* to_string(TwoFrobeniusCase c) {
  switch (c) {
    case TwoFrobeniusCase::A: return "A";
    case TwoFrobeniusCase::B: return "B";
    case TwoFrobeniusCase::C: return "C";
  }
  return "?";
}

std::uint64_t AffineGroupSpec::k_order() const {
  std::uint64_t k = 1;
  for (const auto& c : components) k *= c.field.size;
  return k;
}

std::optional<std::uint64_t> AffineGroupSpec::characteristic() const {
  std::uint64_t p = components.front().field.p;
  for (const auto& c : components)
    if (c.field.p != p) return std::nullopt;
  return p;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

[[noreturn]] void invalid(const std::string& condition) { throw InvalidFamilyError(condition); }

}  // namespace

AffineGroupSpec build_affine_spec(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fields, std::uint64_t d,
    std::uint64_t e) {
  if (fields.empty()) invalid("family needs at least one field component");
  if (d <= 1 || e <= 1) invalid("complement orders d and e must both exceed 1");

  AffineGroupSpec spec;
  spec.d = d;
  spec.e = e;

  std::optional<std::uint64_t> twist_exponent;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    auto [p, n] = fields[i];
    std::ostringstream at;
    at << " (component " << i << ": p=" << p << ", n=" << n << ")";

    if (n % e != 0) invalid("e must divide n so the Galois element has order exactly e" + at.str());
    FieldSpec F = make_field(p, n);
    if (!F.has_tables()) invalid("component field exceeds 2^20 elements" + at.str());
    if ((F.size - 1) % d != 0) invalid("d must divide p^n - 1" + at.str());

    AffineComponent comp;
    comp.sigma_exponent = n / static_cast<std::uint32_t>(e);
    comp.zeta = element_of_order(F, d);

    // C_e must act on C_d without nontrivial fixed points, else G/K is not
    // Frobenius: sigma^j fixes zeta^m iff m*(p^(j*n/e) - 1) = 0 mod d.
    for (std::uint64_t j = 1; j < e; ++j) {
      std::uint64_t twist = pow_u64(p, j * comp.sigma_exponent) - 1;
      if (std::gcd(twist, d) != 1) {
        std::ostringstream msg;
        msg << "fixed-point-free twist fails: gcd(p^(j*n/e) - 1, d) = " << std::gcd(twist, d)
            << " at j=" << j << at.str();
        invalid(msg.str());
      }
    }

    // All components must twist C_d by the same exponent, or the generated
    // group is larger than K_order * d * e.
    std::uint64_t c = pow_u64(p, comp.sigma_exponent) % d;
    if (twist_exponent && *twist_exponent != c)
      invalid("Galois action on the multiplicative twist differs across components" + at.str());
    twist_exponent = c;

    comp.field = std::move(F);
    spec.components.push_back(std::move(comp));
  }

  for (const auto& comp : spec.components) {
    if (field_element_order(comp.field, comp.zeta) != d)
      throw std::logic_error("build_affine_spec: zeta order mismatch");
  }
  return spec;
}

namespace {

struct Radix {
  std::vector<std::uint64_t> stride;
  std::uint64_t total = 1;

  explicit Radix(const AffineGroupSpec& spec) {
    stride.reserve(spec.components.size());
    for (const auto& c : spec.components) {
      stride.push_back(total);
      total *= c.field.size;
    }
  }

  std::uint64_t component(std::uint64_t index, std::size_t i,
                          const AffineGroupSpec& spec) const {
    return (index / stride[i]) % spec.components[i].field.size;
  }
};

}  // namespace

std::vector<Permutation> to_permutation_group(const AffineGroupSpec& spec,
                                              std::uint64_t degree_cap) {
  Radix radix(spec);
  const std::uint64_t degree = radix.total;
  if (degree > degree_cap)
    throw CapExceededError("to_permutation_group: K order larger than degree cap",
                           static_cast<std::size_t>(degree_cap));

  std::vector<Permutation> gens;

  // Translations by the polynomial basis of each additive component.
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const FieldSpec& F = spec.components[i].field;
    for (std::uint32_t j = 0; j < F.n; ++j) {
      const std::uint64_t basis = pow_u64(F.p, j);
      std::vector<Point> images(degree);
      for (std::uint64_t v = 0; v < degree; ++v) {
        std::uint64_t vi = radix.component(v, i, spec);
        std::uint64_t wi = field_add(F, vi, basis);
        images[v] = static_cast<Point>(v + (wi - vi) * radix.stride[i]);
      }
      gens.emplace_back(Permutation::unchecked(std::move(images)));
    }
  }

  // Diagonal multiplication by zeta.
  {
    std::vector<Point> images(degree);
    for (std::uint64_t v = 0; v < degree; ++v) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& comp = spec.components[i];
        w += field_mul(comp.field, radix.component(v, i, spec), comp.zeta) * radix.stride[i];
      }
      images[v] = static_cast<Point>(w);
    }
    gens.emplace_back(Permutation::unchecked(std::move(images)));
  }

  // Diagonal Galois map x -> x^(p^sigma_exponent).
  {
    std::vector<Point> images(degree);
    for (std::uint64_t v = 0; v < degree; ++v) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& comp = spec.components[i];
        std::uint64_t q = pow_u64(comp.field.p, comp.sigma_exponent);
        w += field_pow(comp.field, radix.component(v, i, spec), q) * radix.stride[i];
      }
      images[v] = static_cast<Point>(w);
    }
    gens.emplace_back(Permutation::unchecked(std::move(images)));
  }

  return gens;
}

namespace {

// Per-component data for solving zeta^a sigma^j (v) = v in the log domain.
struct StabilizerTables {
  // mult[i][j] = p_i^(j * sigma_exponent_i) mod (q_i - 1)
  std::vector<std::vector<std::uint64_t>> mult;
  std::vector<std::uint64_t> zeta_step;  // (q_i - 1) / d = log of zeta_i
  std::vector<std::uint64_t> group;      // q_i - 1

  StabilizerTables(const AffineGroupSpec& spec) {
    const std::size_t k = spec.components.size();
    mult.resize(k);
    zeta_step.resize(k);
    group.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const FieldSpec& F = spec.components[i].field;
      group[i] = F.size - 1;
      zeta_step[i] = group[i] / spec.d;
      mult[i].resize(spec.e);
      std::uint64_t m = 1;
      const std::uint64_t step = pow_u64(F.p, spec.components[i].sigma_exponent) % group[i];
      for (std::uint64_t j = 0; j < spec.e; ++j) {
        mult[i][j] = m;
        m = (m * step) % group[i];
      }
    }
  }

  // The unique a in [0, d) with zeta^a sigma^j (v) = v, if one exists.
  // `logs` holds the discrete log of each nonzero component (ignored
  // entries where zero[i] is set).
  std::optional<std::uint64_t> solve(const AffineGroupSpec& spec,
                                     const std::vector<std::uint64_t>& logs,
                                     const std::vector<bool>& zero, std::uint64_t j) const {
    std::optional<std::uint64_t> a;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      if (zero[i]) continue;
      // a * zeta_step[i] = log(v) * (1 - mult) mod (q - 1)
      std::uint64_t rhs = (logs[i] % group[i]) * ((group[i] + 1 - mult[i][j]) % group[i]) % group[i];
      if (rhs % zeta_step[i] != 0) return std::nullopt;
      std::uint64_t candidate = (rhs / zeta_step[i]) % spec.d;
      if (a && *a != candidate) return std::nullopt;
      a = candidate;
    }
    return a;
  }
};

// Walks every nonzero vector of K and reports the stabilizer order of each.
template <typename Visit>
void for_each_stabilizer_order(const AffineGroupSpec& spec, Visit&& visit) {
  const std::size_t k = spec.components.size();
  StabilizerTables tables(spec);

  std::vector<std::uint64_t> value(k, 0), logs(k, 0);
  std::vector<bool> zero(k, true);

  // Odometer over the component encodings, skipping the zero vector.
  while (true) {
    std::size_t i = 0;
    while (i < k && value[i] + 1 == spec.components[i].field.size) {
      value[i] = 0;
      zero[i] = true;
      ++i;
    }
    if (i == k) break;
    ++value[i];
    zero[i] = false;
    logs[i] = spec.components[i].field.log_table[value[i]];

    std::uint64_t stab = 0;
    for (std::uint64_t j = 0; j < spec.e; ++j)
      if (tables.solve(spec, logs, zero, j)) ++stab;
    visit(value, stab);
  }
}

void require_structured_preconditions(const AffineGroupSpec& spec, const char* who) {
  auto p = spec.characteristic();
  if (!p)
    throw StructuredCountError(std::string(who) +
                               ": components have mixed characteristics; fall back to brute force");
  if (spec.e % *p == 0)
    throw StructuredCountError(std::string(who) +
                               ": p divides |G:L|, so order-p subgroups escape K; fall back to "
                               "brute force");
}

}  // namespace

std::uint64_t stabilizer_order(const AffineGroupSpec& spec,
                               const std::vector<std::uint64_t>& values) {
  return stabilizer_pairs(spec, values).size();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> stabilizer_pairs(
    const AffineGroupSpec& spec, const std::vector<std::uint64_t>& values) {
  if (values.size() != spec.components.size())
    throw std::invalid_argument("stabilizer_pairs: wrong number of components");
  bool all_zero = true;
  std::vector<std::uint64_t> logs(values.size(), 0);
  std::vector<bool> zero(values.size(), true);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    all_zero = false;
    zero[i] = false;
    logs[i] = spec.components[i].field.log_table[values[i]];
  }
  if (all_zero) throw std::invalid_argument("stabilizer_pairs: zero vector");

  StabilizerTables tables(spec);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t j = 0; j < spec.e; ++j)
    if (auto a = tables.solve(spec, logs, zero, j)) pairs.emplace_back(*a, j);
  return pairs;
}

std::uint64_t structured_m_p_star(const AffineGroupSpec& spec) {
  require_structured_preconditions(spec, "structured_m_p_star");
  const std::uint64_t p = *spec.characteristic();

  std::uint64_t trivial = 0;
  for_each_stabilizer_order(spec, [&](const std::vector<std::uint64_t>&, std::uint64_t stab) {
    if (stab == 1) ++trivial;
  });

  if (trivial % (p - 1) != 0)
    throw std::logic_error("structured_m_p_star: count not divisible by p - 1");
  return trivial / (p - 1);
}

std::map<std::uint64_t, std::uint64_t> structured_fixed_involution_breakdown(
    const AffineGroupSpec& spec) {
  require_structured_preconditions(spec, "structured_fixed_involution_breakdown");
  if (*spec.characteristic() != 2)
    throw StructuredCountError(
        "structured_fixed_involution_breakdown: requires characteristic 2");

  std::map<std::uint64_t, std::uint64_t> histogram;
  for_each_stabilizer_order(spec, [&](const std::vector<std::uint64_t>&, std::uint64_t stab) {
    if (stab > 1) ++histogram[stab];
  });
  return histogram;
}

StructuredCounts structured_counts(const AffineGroupSpec& spec) {
  StructuredCounts counts;
  counts.K_order = spec.k_order();
  counts.H_order = spec.d;
  counts.index_G_L = spec.e;
  counts.group_order = spec.group_order();

  auto p = spec.characteristic();
  if (!p) {
    counts.case_label = TwoFrobeniusCase::A;
    counts.delta_component_count = counts.K_order + 1;
    return counts;
  }

  counts.p = *p;
  if (is_p_power(spec.e, *p)) {
    // K and G/L are p-groups: the count needs m_p(G), which requires
    // enumeration.
    counts.case_label = TwoFrobeniusCase::B;
    return counts;
  }

  counts.case_label = TwoFrobeniusCase::C;
  if (spec.e % *p != 0) {
    counts.m_p_star = structured_m_p_star(spec);
    counts.delta_component_count = counts.K_order + counts.H_order + *counts.m_p_star;
  }
  return counts;
}

}  // namespace cycgraph
