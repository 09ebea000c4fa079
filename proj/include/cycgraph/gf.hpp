#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cycgraph {

/// GF(p^n) in a polynomial basis.  Elements are encoded as integers in
/// [0, p^n): the base-p digits of the encoding are the coefficients, lowest
/// degree first.  The modulus is the monic irreducible polynomial of degree n
/// whose encoding is least; for fields of at most 2^20 elements, exp/log
/// tables over a canonical primitive element back the arithmetic.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t size = 0;  // p^n

  /// Coefficients of the modulus, lowest degree first; length n + 1, monic.
  std::vector<std::uint32_t> modulus;

  /// First primitive element in encoding order (0 when tables are absent).
  std::uint64_t generator = 0;
  std::vector<std::uint32_t> exp_table;  // generator^k for k in [0, size-1)
  std::vector<std::uint32_t> log_table;  // discrete log, index 0 unused

  bool has_tables() const { return !exp_table.empty(); }
  std::string modulus_string() const;
};

/// Constructs GF(p^n).  Requires p prime and 1 <= n <= 20; the modulus is
/// verified irreducible by exhaustive trial division.
FieldSpec make_field(std::uint32_t p, std::uint32_t n);

std::uint64_t field_add(const FieldSpec& F, std::uint64_t a, std::uint64_t b);
std::uint64_t field_mul(const FieldSpec& F, std::uint64_t a, std::uint64_t b);
std::uint64_t field_pow(const FieldSpec& F, std::uint64_t a, std::uint64_t k);

/// The Frobenius endomorphism x -> x^p.
std::uint64_t frobenius(const FieldSpec& F, std::uint64_t a);

/// Multiplicative order of a nonzero element.
std::uint64_t field_element_order(const FieldSpec& F, std::uint64_t a);

/// Deterministic element of multiplicative order exactly d: the canonical
/// primitive element raised to (p^n - 1)/d.  Requires d | p^n - 1.
std::uint64_t element_of_order(const FieldSpec& F, std::uint64_t d);

}  // namespace cycgraph
