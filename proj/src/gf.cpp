#include "cycgraph/gf.hpp"

#include <sstream>
#include <stdexcept>

#include "cycgraph/errors.hpp"
#include "cycgraph/group.hpp"

namespace cycgraph {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

std::vector<std::uint32_t> decode(std::uint64_t x, std::uint32_t p, std::uint32_t len) {
  std::vector<std::uint32_t> digits(len, 0);
  for (std::uint32_t i = 0; i < len && x; ++i) {
    digits[i] = static_cast<std::uint32_t>(x % p);
    x /= p;
  }
  return digits;
}

std::uint64_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint64_t x = 0;
  for (std::size_t i = digits.size(); i-- > 0;) x = x * p + digits[i];
  return x;
}

// Degree of a coefficient vector (-1 for the zero polynomial).
int poly_degree(const std::vector<std::uint32_t>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i]) return static_cast<int>(i);
  return -1;
}

// Remainder of f modulo g over GF(p); g must be monic.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f,
                                    const std::vector<std::uint32_t>& g, std::uint32_t p) {
  int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg; i = poly_degree(f)) {
    std::uint64_t c = f[i];
    for (int k = 0; k <= dg; ++k) {
      std::uint64_t sub = (c * g[k]) % p;
      f[i - dg + k] = static_cast<std::uint32_t>((f[i - dg + k] + p - sub) % p);
    }
  }
  f.resize(dg > 0 ? dg : 1, 0);
  return f;
}

std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus,
                                       std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(prod), modulus, p);
}

bool divides(const std::vector<std::uint32_t>& divisor, const std::vector<std::uint32_t>& f,
             std::uint32_t p) {
  return poly_degree(poly_mod(f, divisor, p)) < 0;
}

// Exhaustive trial division by every monic polynomial of degree 1..n/2.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  int n = poly_degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  for (std::uint32_t d = 1; d <= static_cast<std::uint32_t>(n) / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
      auto divisor = decode(m, p, d + 1);
      divisor[d] = 1;
      if (divides(divisor, f, p)) return false;
    }
  }
  return true;
}

std::uint64_t mul_no_tables(const FieldSpec& F, std::uint64_t a, std::uint64_t b) {
  auto pa = decode(a, F.p, F.n);
  auto pb = decode(b, F.p, F.n);
  return encode(poly_mulmod(pa, pb, F.modulus, F.p), F.p);
}

}  // namespace

std::string FieldSpec::modulus_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    if (!modulus[i]) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || modulus[i] != 1) out << modulus[i];
    if (i == 1)
      out << (modulus[i] != 1 ? "*x" : "x");
    else if (i > 1)
      out << (modulus[i] != 1 ? "*x^" : "x^") << i;
  }
  return out.str();
}

FieldSpec make_field(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
  if (n < 1 || n > 20) throw std::invalid_argument("make_field: need 1 <= n <= 20");

  FieldSpec F;
  F.p = p;
  F.n = n;
  F.size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (F.size > (std::uint64_t(1) << 62) / p)
      throw std::invalid_argument("make_field: field too large");
    F.size *= p;
  }

  // Least monic irreducible of degree n, by integer encoding of the lower
  // coefficients.
  bool found = false;
  for (std::uint64_t m = 0; m < F.size; ++m) {
    auto candidate = decode(m, p, n + 1);
    candidate[n] = 1;
    if (is_irreducible(candidate, p)) {
      F.modulus = std::move(candidate);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("make_field: no irreducible polynomial found");

  if (F.size <= kTableLimit) {
    const std::uint64_t group_order = F.size - 1;
    for (std::uint64_t g = 1; g < F.size; ++g) {
      // Multiplicative order by direct powering.
      std::uint64_t x = g;
      std::uint64_t order = 1;
      while (x != 1) {
        x = mul_no_tables(F, x, g);
        ++order;
      }
      if (order == group_order) {
        F.generator = g;
        break;
      }
    }
    F.exp_table.resize(group_order ? group_order : 1);
    F.log_table.assign(F.size, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < F.exp_table.size(); ++k) {
      F.exp_table[k] = static_cast<std::uint32_t>(x);
      F.log_table[x] = static_cast<std::uint32_t>(k);
      x = mul_no_tables(F, x, F.generator);
    }
  }
  return F;
}

std::uint64_t field_add(const FieldSpec& F, std::uint64_t a, std::uint64_t b) {
  if (F.p == 2) return a ^ b;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < F.n; ++i) {
    out += ((a % F.p + b % F.p) % F.p) * place;
    a /= F.p;
    b /= F.p;
    place *= F.p;
  }
  return out;
}

std::uint64_t field_mul(const FieldSpec& F, std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (F.has_tables()) {
    std::uint64_t k = F.log_table[a] + F.log_table[b];
    const std::uint64_t m = F.size - 1;
    return F.exp_table[k >= m ? k - m : k];
  }
  return mul_no_tables(F, a, b);
}

std::uint64_t field_pow(const FieldSpec& F, std::uint64_t a, std::uint64_t k) {
  if (a == 0) return k == 0 ? 1 : 0;
  if (F.has_tables()) {
    const std::uint64_t m = F.size - 1;
    return F.exp_table[(static_cast<unsigned __int128>(F.log_table[a]) * k) % m];
  }
  std::uint64_t result = 1;
  std::uint64_t base = a;
  while (k) {
    if (k & 1) result = field_mul(F, result, base);
    base = field_mul(F, base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t frobenius(const FieldSpec& F, std::uint64_t a) { return field_pow(F, a, F.p); }

std::uint64_t field_element_order(const FieldSpec& F, std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("field_element_order: zero has no order");
  std::uint64_t x = a;
  std::uint64_t order = 1;
  while (x != 1) {
    x = field_mul(F, x, a);
    ++order;
  }
  return order;
}

std::uint64_t element_of_order(const FieldSpec& F, std::uint64_t d) {
  const std::uint64_t m = F.size - 1;
  if (d == 0 || m % d != 0)
    throw std::invalid_argument("element_of_order: d does not divide p^n - 1");
  if (!F.has_tables())
    throw std::invalid_argument("element_of_order: field too large to scan");
  return field_pow(F, F.generator, m / d);
}

}  // namespace cycgraph
