#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cycgraph/affine.hpp"
#include "cycgraph/group.hpp"
#include "cycgraph/verify.hpp"

namespace cycgraph {

/// Parsed form of a group-specification JSON document.
///
/// Kinds:
///   {"kind": "perm", "degree": 4, "generators": [[[0,1]], [[0,1,2,3]]]}
///       generators as lists of cycles, cycles as 0-based point lists
///   {"kind": "affine", "components": [[5,2]], "d": 3, "e": 2}
///   {"kind": "sym", "n": 4}
///   {"kind": "named-fixture", "name": "example1"}
///       names: example1..example6, a4, s3
struct GroupSpecDocument {
  struct Perm {
    std::size_t degree;
    std::vector<std::vector<std::vector<Point>>> generators;
  };
  struct Affine {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> components;
    std::uint64_t d;
    std::uint64_t e;
  };
  struct Sym {
    std::size_t n;
  };
  struct Named {
    std::string name;
  };

  std::variant<Perm, Affine, Sym, Named> body;

  /// Throws SpecParseError on malformed documents.
  static GroupSpecDocument parse(const nlohmann::json& doc);

  /// Parses either inline JSON text or, failing that, a file path.
  static GroupSpecDocument load(const std::string& text_or_path);

  /// Canonical re-serialization (fixed key order).
  nlohmann::ordered_json to_json() const;

  std::string describe() const;

  bool is_named() const { return std::holds_alternative<Named>(body); }

  /// Replaces a named fixture by its definition.
  GroupSpecDocument resolved() const;
};

/// What a spec document denotes once resolved: either permutation generators
/// to enumerate or an affine family.
struct RealizedSpec {
  std::optional<AffineGroupSpec> affine;
  std::vector<Permutation> generators;  // when not affine
  std::size_t degree = 1;
};

RealizedSpec realize(const GroupSpecDocument& doc, const Caps& caps);

/// JSON rendering of a verification report, schema-stable and deterministic:
/// {spec, order, detection:{found, case, K_order, H_order, index_G_L},
///  checks:[{name, pass}], counts:[{graph, method, value}],
///  comparisons:[{name, formula, brute, match}]}.
nlohmann::ordered_json report_to_json(const GroupSpecDocument& doc,
                                      const VerificationReport& report);

/// JSON rendering of a single component report.
nlohmann::ordered_json component_report_to_json(const GroupSpecDocument& doc,
                                                const ComponentReport& report);

/// Human-readable rendering of a verification report.
std::string report_to_text(const GroupSpecDocument& doc, const VerificationReport& report);

}  // namespace cycgraph
