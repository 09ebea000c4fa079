#include "cycgraph/spec_doc.hpp"

#include <fstream>
#include <sstream>

#include "cycgraph/errors.hpp"

namespace cycgraph {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::uint64_t require_positive_int(const json& j, const char* field) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
    throw SpecParseError(std::string("spec: ") + field + " must be a positive integer");
  return j.get<std::uint64_t>();
}

GroupSpecDocument::Perm parse_perm(const json& doc) {
  GroupSpecDocument::Perm perm;
  if (!doc.contains("degree") || !doc.contains("generators"))
    throw SpecParseError("spec: perm needs degree and generators");
  perm.degree = require_positive_int(doc.at("degree"), "degree");
  const auto& gens = doc.at("generators");
  if (!gens.is_array()) throw SpecParseError("spec: generators must be an array");
  for (const auto& gen : gens) {
    if (!gen.is_array()) throw SpecParseError("spec: each generator is an array of cycles");
    std::vector<std::vector<Point>> cycles;
    for (const auto& cycle : gen) {
      if (!cycle.is_array()) throw SpecParseError("spec: each cycle is an array of points");
      std::vector<Point> points;
      for (const auto& entry : cycle) {
        if (!entry.is_number_unsigned())
          throw SpecParseError("spec: cycle entries are nonnegative integers");
        std::uint64_t v = entry.get<std::uint64_t>();
        if (v >= perm.degree) throw SpecParseError("spec: cycle entry exceeds degree");
        points.push_back(static_cast<Point>(v));
      }
      cycles.push_back(std::move(points));
    }
    perm.generators.push_back(std::move(cycles));
  }
  return perm;
}

GroupSpecDocument::Affine parse_affine(const json& doc) {
  GroupSpecDocument::Affine affine;
  if (!doc.contains("components") || !doc.contains("d") || !doc.contains("e"))
    throw SpecParseError("spec: affine needs components, d and e");
  const auto& comps = doc.at("components");
  if (!comps.is_array() || comps.empty())
    throw SpecParseError("spec: components must be a nonempty array");
  for (const auto& comp : comps) {
    if (!comp.is_array() || comp.size() != 2)
      throw SpecParseError("spec: each component is a pair [p, n]");
    auto p = require_positive_int(comp.at(0), "component p");
    auto n = require_positive_int(comp.at(1), "component n");
    affine.components.emplace_back(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  }
  affine.d = require_positive_int(doc.at("d"), "d");
  affine.e = require_positive_int(doc.at("e"), "e");
  return affine;
}

const std::vector<std::pair<std::string, std::string>>& named_fixture_table() {
  // The worked examples ship in-repo so they run without any external group
  // database.
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"example1", R"({"kind":"sym","n":4})"},
      {"example2", R"({"kind":"affine","components":[[5,2]],"d":3,"e":2})"},
      {"example3", R"({"kind":"affine","components":[[2,2],[5,2]],"d":3,"e":2})"},
      {"example4", R"({"kind":"affine","components":[[2,3]],"d":7,"e":3})"},
      {"example5", R"({"kind":"affine","components":[[2,10]],"d":11,"e":10})"},
      {"example6", R"({"kind":"affine","components":[[2,15]],"d":151,"e":15})"},
      {"a4", R"({"kind":"perm","degree":4,"generators":[[[0,1,2]],[[0,1],[2,3]]]})"},
      {"s3", R"({"kind":"sym","n":3})"},
  };
  return table;
}

}  // namespace

GroupSpecDocument GroupSpecDocument::parse(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw SpecParseError("spec: document must be an object with a \"kind\"");
  const std::string kind = doc.at("kind").is_string() ? doc.at("kind").get<std::string>() : "";

  GroupSpecDocument out;
  if (kind == "perm") {
    out.body = parse_perm(doc);
  } else if (kind == "affine") {
    out.body = parse_affine(doc);
  } else if (kind == "sym") {
    if (!doc.contains("n")) throw SpecParseError("spec: sym needs n");
    out.body = Sym{static_cast<std::size_t>(require_positive_int(doc.at("n"), "n"))};
  } else if (kind == "named-fixture") {
    if (!doc.contains("name") || !doc.at("name").is_string())
      throw SpecParseError("spec: named-fixture needs a name");
    Named named{doc.at("name").get<std::string>()};
    bool known = false;
    for (const auto& [name, text] : named_fixture_table()) known = known || name == named.name;
    if (!known) throw SpecParseError("spec: unknown fixture name \"" + named.name + "\"");
    out.body = std::move(named);
  } else {
    throw SpecParseError("spec: unknown kind \"" + kind + "\"");
  }
  return out;
}

GroupSpecDocument GroupSpecDocument::load(const std::string& text_or_path) {
  json doc = json::parse(text_or_path, nullptr, false);
  if (doc.is_discarded()) {
    std::ifstream in(text_or_path);
    if (!in) throw SpecParseError("spec: cannot open \"" + text_or_path + "\"");
    doc = json::parse(in, nullptr, false);
    if (doc.is_discarded())
      throw SpecParseError("spec: \"" + text_or_path + "\" is not valid JSON");
  }
  return parse(doc);
}

ordered_json GroupSpecDocument::to_json() const {
  ordered_json out;
  if (const auto* perm = std::get_if<Perm>(&body)) {
    out["kind"] = "perm";
    out["degree"] = perm->degree;
    out["generators"] = perm->generators;
  } else if (const auto* affine = std::get_if<Affine>(&body)) {
    out["kind"] = "affine";
    ordered_json comps = ordered_json::array();
    for (auto [p, n] : affine->components) comps.push_back({p, n});
    out["components"] = std::move(comps);
    out["d"] = affine->d;
    out["e"] = affine->e;
  } else if (const auto* sym = std::get_if<Sym>(&body)) {
    out["kind"] = "sym";
    out["n"] = sym->n;
  } else {
    out["kind"] = "named-fixture";
    out["name"] = std::get<Named>(body).name;
  }
  return out;
}

std::string GroupSpecDocument::describe() const {
  return to_json().dump();
}

GroupSpecDocument GroupSpecDocument::resolved() const {
  const auto* named = std::get_if<Named>(&body);
  if (!named) return *this;
  for (const auto& [name, text] : named_fixture_table())
    if (name == named->name) return parse(json::parse(text));
  throw SpecParseError("spec: unknown fixture name \"" + named->name + "\"");
}

RealizedSpec realize(const GroupSpecDocument& doc, const Caps& caps) {
  GroupSpecDocument resolved = doc.resolved();
  RealizedSpec out;
  if (const auto* perm = std::get_if<GroupSpecDocument::Perm>(&resolved.body)) {
    out.degree = perm->degree;
    for (const auto& cycles : perm->generators)
      out.generators.push_back(Permutation::from_cycles(perm->degree, cycles));
  } else if (const auto* affine = std::get_if<GroupSpecDocument::Affine>(&resolved.body)) {
    out.affine = build_affine_spec(affine->components, affine->d, affine->e);
    out.degree = out.affine->k_order();
  } else if (const auto* sym = std::get_if<GroupSpecDocument::Sym>(&resolved.body)) {
    out.degree = sym->n;
    if (sym->n >= 2) {
      out.generators.push_back(Permutation::from_cycles(sym->n, {{0, 1}}));
      if (sym->n >= 3) {
        std::vector<Point> full(sym->n);
        for (std::size_t i = 0; i < sym->n; ++i) full[i] = static_cast<Point>(i);
        out.generators.push_back(Permutation::from_cycles(sym->n, {full}));
      }
    }
  } else {
    throw std::logic_error("realize: unresolved named fixture");
  }
  (void)caps;
  return out;
}

namespace {

ordered_json detection_to_json(const DetectionSummary& d) {
  ordered_json out;
  out["found"] = d.found;
  out["case"] = d.case_label ? ordered_json(to_string(*d.case_label)) : ordered_json(nullptr);
  out["K_order"] = d.K_order;
  out["H_order"] = d.H_order;
  out["index_G_L"] = d.index_G_L;
  return out;
}

}  // namespace

ordered_json report_to_json(const GroupSpecDocument& doc, const VerificationReport& report) {
  ordered_json out;
  out["spec"] = doc.to_json();
  out["order"] = report.order;
  out["detection"] = detection_to_json(report.detection);

  ordered_json checks = ordered_json::array();
  for (const auto& check : report.checks) {
    ordered_json c;
    c["name"] = check.name;
    c["pass"] = check.pass;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);

  ordered_json counts = ordered_json::array();
  for (const auto& entry : report.counts) {
    ordered_json c;
    c["graph"] = to_string(entry.graph);
    c["method"] = to_string(entry.method);
    c["value"] = entry.value;
    counts.push_back(std::move(c));
  }
  out["counts"] = std::move(counts);

  ordered_json comparisons = ordered_json::array();
  for (const auto& cmp : report.comparisons) {
    ordered_json c;
    c["name"] = cmp.name;
    c["formula"] = cmp.formula_value;
    c["brute"] = cmp.brute_value ? ordered_json(*cmp.brute_value)
                                 : ordered_json("skipped: " + cmp.skip_reason);
    c["match"] = cmp.skipped ? ordered_json("skipped") : ordered_json(cmp.match);
    comparisons.push_back(std::move(c));
  }
  out["comparisons"] = std::move(comparisons);
  return out;
}

ordered_json component_report_to_json(const GroupSpecDocument& doc,
                                      const ComponentReport& report) {
  ordered_json out;
  out["spec"] = doc.to_json();
  out["graph"] = to_string(report.graph_kind);
  out["method"] = to_string(report.method);
  out["component_count"] = report.component_count;
  out["vertex_count"] = report.vertex_count;
  out["component_sizes"] = report.component_sizes;
  return out;
}

std::string report_to_text(const GroupSpecDocument& doc, const VerificationReport& report) {
  std::ostringstream out;
  out << "spec: " << doc.describe() << "\n";
  out << "order: " << report.order << "\n";
  const auto& d = report.detection;
  if (d.found) {
    out << "detection: 2-Frobenius chain, case " << to_string(*d.case_label) << " (|K| = "
        << d.K_order << ", |H| = " << d.H_order << ", |G:L| = " << d.index_G_L;
    if (d.p) out << ", p = " << *d.p;
    out << ")" << (d.structured_only ? " [structured, not enumerated]" : "") << "\n";
  } else if (d.frobenius_found) {
    out << "detection: Frobenius group (kernel order " << d.frobenius_kernel_order
        << ", complement order " << d.frobenius_complement_order << ")\n";
  } else {
    out << "detection: no Frobenius or 2-Frobenius chain found\n";
  }
  for (const auto& check : report.checks)
    out << "check: " << check.name << ": " << (check.pass ? "pass" : "FAIL") << "\n";
  for (const auto& entry : report.counts) {
    out << "count: " << to_string(entry.graph) << " " << to_string(entry.method) << " = "
        << entry.value;
    if (entry.formula) out << " [" << to_string(*entry.formula) << "]";
    out << "\n";
  }
  for (const auto& cmp : report.comparisons) {
    out << "compare: " << cmp.name << ": formula " << cmp.formula_value << " vs ";
    if (cmp.skipped)
      out << "skipped: " << cmp.skip_reason;
    else
      out << *cmp.brute_value << (cmp.match ? " (match)" : " (MISMATCH)");
    out << "\n";
  }
  return out.str();
}

}  // namespace cycgraph
