#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycgraph/affine.hpp"
#include "cycgraph/formulas.hpp"
#include "cycgraph/graphs.hpp"
#include "cycgraph/structure.hpp"

namespace cycgraph {

struct Caps {
  std::size_t enum_cap = kDefaultEnumCap;
  std::uint64_t pair_cap = kDefaultPairCap;
  std::uint64_t degree_cap = kDefaultDegreeCap;
};

struct DetectionSummary {
  bool found = false;             // verified 2-Frobenius chain
  bool structured_only = false;   // chain asserted from affine data, group not enumerated
  std::optional<TwoFrobeniusCase> case_label;
  std::uint64_t K_order = 0;
  std::uint64_t H_order = 0;
  std::uint64_t index_G_L = 0;
  std::optional<std::uint64_t> p;

  bool frobenius_found = false;   // Frobenius-only fallback
  std::uint64_t frobenius_kernel_order = 0;
  std::uint64_t frobenius_complement_order = 0;
};

struct CountEntry {
  GraphKind graph;
  CountMethod method;
  std::uint64_t value;
  std::optional<FormulaName> formula;
};

struct Comparison {
  std::string name;
  std::uint64_t formula_value = 0;
  std::optional<std::uint64_t> brute_value;
  bool skipped = false;
  std::string skip_reason;
  bool match = false;
};

struct VerificationReport {
  std::uint64_t order = 0;
  DetectionSummary detection;
  std::vector<StructureCheck> checks;
  std::vector<CountEntry> counts;
  std::vector<Comparison> comparisons;

  /// True when every comparison either matched or was skipped.
  bool all_match() const;
  bool checks_pass() const;
};

/// Full cross-check of an enumerated group: detection, formula counts,
/// structural checks, and the brute-force counts that fit the caps.
/// `with_brute` false restricts to what the `info` surface needs (the
/// commuting-graph scan is skipped).
VerificationReport run_verification(const EnumeratedGroup& G, const Caps& caps,
                                    bool with_brute = true);

/// As above for an affine family: structured counts always, plus the full
/// enumerated cross-check when the group order fits the enumeration cap.
VerificationReport run_verification(const AffineGroupSpec& spec, const Caps& caps,
                                    bool with_brute = true);

}  // namespace cycgraph
